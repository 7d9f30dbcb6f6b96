#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgt/search.hpp"

namespace sgt {

struct CheckRow {
    std::string check;
    std::string detail;
    bool pass = false;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckRow> rows;
    std::optional<SearchCertificate> certificate;

    bool all_pass() const;
    void add(std::string check, bool pass, std::string detail = "");
};

std::string report_json(const CheckReport& r);

/// Exact certificates for the lambda_1(GammaNT) bounds: g_{n,3}(n-2) = 0,
/// g_{n,t}(n-2) = -(t-3)^2 < 0 for t != 3, and the derivative chain at n-1
/// proving lambda_1 < n-1. Pure integer arithmetic.
CheckReport verify_lemma22(int n_lo, int n_hi);

/// Exact verification of the quotient-polynomial machinery for U, Z1, Z2, W:
/// coefficient tables against Faddeev-LeVerrier recomputation, the quoted
/// evaluations at n-2 with their derivative chains, and the strict ordering
/// lambda_1(Gamma_{n,3}) > lambda_1(U|Z1|Z2|W).
CheckReport verify_lemma23(int n_lo, int n_hi);

/// Equitable-partition reconstruction: Spec(Q) plus the residual spectrum
/// equals the direct spectrum, and the residuals match the
/// {-1^[..], 0^[..]} patterns.
CheckReport verify_lemma21_reconstruction(int n_lo, int n_hi, double tol = 1e-8);

/// Search-backed verification at small order; n <= 6 exhaustive, n in {7, 8}
/// guided. The certificate is embedded in the report.
CheckReport verify_theorem11_small_n(int n, int workers, std::uint64_t seed = 0);

/// Sampled cross-checks of the two spectral-radius bound oracles.
CheckReport verify_bounds_32_33(int n_lo, int n_hi, std::uint64_t seed = 0);

/// Deterministic random signed graph used by the sampled suites.
SignedGraph random_signed_graph(int n, double edge_prob, double neg_prob, std::uint64_t& state);

}  // namespace sgt
