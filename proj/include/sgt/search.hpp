#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sgt/canonical.hpp"
#include "sgt/forbidden.hpp"
#include "sgt/spectra.hpp"

namespace sgt {

enum class SearchMode { Exhaustive, GuidedOneNegativeEdge, Anneal, HillClimb };

const char* search_mode_name(SearchMode m);
std::optional<SearchMode> search_mode_from_string(const std::string& s);

struct SearchConfig {
    int n = 7;
    ForbiddenFamily family = ForbiddenFamily::kst(3, 3);
    SearchMode mode = SearchMode::GuidedOneNegativeEdge;
    std::uint64_t seed = 0;
    int restarts = 64;
    int max_steps = 20000;
    double tol = 1e-9;
    int workers = 1;
    double t0 = 1.0;         // annealing start temperature
    double cooling = 0.995;  // geometric factor per step
    int canon_limit = limits::kCanonicalization;

    /// Exhaustive: 2 <= n <= 6. Guided: n in {7, 8}. Anneal/HillClimb: 4 <= n <= 32.
    void validate() const;  // throws ConfigError
};

enum class Verdict { BoundHolds, CounterexampleFound };

/// Unit eigenvector for lambda_1; after normalize_to_nonneg all entries
/// are >= -tol.
struct PerronVector {
    Eigen::VectorXd entries;
    double lambda1 = 0;
};

struct SearchCertificate {
    SearchConfig config;
    SignedGraph best_graph;
    double best_lambda1 = 0;
    double bound = 0;  // n - 2
    Verdict verdict = Verdict::BoundHolds;
    bool matches_gamma_n3 = false;
    std::string match_method;  // "canonical-key" or "lambda-within-tol"
    std::string restriction;   // where the signature space was restricted
    std::map<std::string, std::uint64_t> stats;
    /// lambda_1 histogram, bucket width 0.01, key = floor(lambda / 0.01);
    /// populated by the enumeration modes.
    std::map<long, std::uint64_t> histogram;
};

/// Deterministic JSON bytes for the certificate (includes the `.sg` text of
/// best_graph; identical configs produce identical bytes).
std::string certificate_json(const SearchCertificate& c);
std::string histogram_csv(const SearchCertificate& c);

/// Switch the graph so that a lambda_1 eigenvector becomes entrywise
/// nonnegative. The returned set is {i : x_i < 0} for the eigenvector of the
/// input graph. Throws Disconnected for disconnected inputs.
std::tuple<SignedGraph, SwitchingSet, PerronVector> normalize_to_nonneg(const SignedGraph& g,
                                                                        double tol = 1e-9);

/// One index-raising edit, tagged with its generating rule.
struct Move {
    enum class Rule { AddPositiveEdge, RemoveNegativeEdge, ReverseNegativeEdge, RotateEdge };
    Rule rule;
    int r = -1, s = -1, w = -1;  // rule-dependent endpoints
};

const char* move_rule_name(Move::Rule r);

/// Candidate edits from a nonnegative unit lambda_1 eigenvector:
/// (a) add a positive edge rs when x_r x_s >= 0, not both zero;
/// (b) remove a negative edge; (c) reverse a negative edge's sign;
/// (d) rotate a positive edge sw to rw when x_r >= x_s, w in N(s)\N[r], x_w > 0.
std::vector<Move> enumerate_moves(const SignedGraph& g, const PerronVector& x,
                                  double zero_tol = 1e-9);
SignedGraph apply_move(const SignedGraph& g, const Move& m);

/// Tagged candidate graphs for every enumerated move.
std::vector<std::pair<Move, SignedGraph>> perturb_moves(const SignedGraph& g,
                                                        const PerronVector& x,
                                                        double zero_tol = 1e-9);

/// 1/2 (sqrt(n^2 - 8) + n - 4): spectral-radius bound for connected
/// unbalanced graphs with no unbalanced triangle.
double bound_c3free(int n);

/// rho(g) <= n - 2 + tol for an unbalanced graph with no unbalanced K_4.
/// Preconditions (order >= 7, unbalanced, K_4-free) are enforced.
bool bound_k4free_check(const SignedGraph& g, double tol = 1e-9);

SearchCertificate run_search(const SearchConfig& cfg);

}  // namespace sgt
