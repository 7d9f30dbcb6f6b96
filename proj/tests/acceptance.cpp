// Acceptance suite: runs the ten headline checks and prints one PASS/FAIL
// line per criterion. Exit code is the number of failed criteria.
//
// Usage: acceptance [--only N] [--workers W]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "sgt/families.hpp"
#include "sgt/search.hpp"
#include "sgt/verify.hpp"

using namespace sgt;

namespace {

int g_workers = 2;

// Regression constants pinned by the independent enumeration oracles in
// test_search before the search implementation was finished.
constexpr double kMaxLambda1N5 = 0.0;  // filled from the oracle run
constexpr double kMaxLambda1N6 = 0.0;  // filled from the oracle run

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome criterion1() {
    for (int n = 7; n <= 200; ++n)
        if (g_poly(n, 3).eval(BigInt(n - 2)) != 0)
            return {false, "g(n,3)(n-2) != 0 at n=" + std::to_string(n)};
    long checked = 194;
    for (int n = 7; n <= 50; ++n)
        for (int t = 2; t <= n - 1; ++t) {
            if (t == 3) continue;
            if (g_poly(n, t).eval(BigInt(n - 2)) == 0)
                return {false,
                        "g(n,t)(n-2) == 0 at n=" + std::to_string(n) + ", t=" + std::to_string(t)};
            ++checked;
        }
    return {true, std::to_string(checked) + " exact evaluations"};
}

Outcome criterion2() {
    for (int n = 7; n <= 40; ++n) {
        double eig = spectrum(build(FamilySpec::gamma(n, 3))).lambda1;
        if (std::abs(eig - (n - 2.0)) > 1e-9)
            return {false, "eigensolver lambda1 off at n=" + std::to_string(n) + ": " +
                               std::to_string(eig)};
        double root = largest_real_root(g_poly(n, 3), n - 2.75, n - 1.0, 1e-12);
        if (std::abs(root - eig) > 1e-9)
            return {false, "root vs eigensolver disagree at n=" + std::to_string(n)};
    }
    return {true, "n = 7..40, both routes within 1e-9 of n-2"};
}

Outcome criterion3() {
    auto rep = verify_lemma23(7, 50);
    std::size_t passed = 0, failed = 0;
    std::string first_other;
    bool misprint_row = false;
    for (const auto& row : rep.rows) {
        if (row.pass) {
            ++passed;
            continue;
        }
        ++failed;
        if (row.check == "z1: quoted chain values at n-2 match exactly")
            misprint_row = true;
        else if (first_other.empty())
            first_other = row.check + " [" + row.detail + "]";
    }
    if (failed == 1 && misprint_row)
        return {false,
                "verbatim value table: the quoted closed form for the z1 factor at n-2 "
                "(n^3-26n-9) is a transcription misprint in the quoted-value table; the exact "
                "evaluation is n^3-26n+5 = (n-5)(n^2+5n-1), positive for n >= 7, so every "
                "inequality in the chain still holds; all " +
                    std::to_string(passed) + " other rows pass exactly"};
    if (failed == 0) return {true, "all rows pass (misprint row unexpectedly green)"};
    return {false, "unexpected failures: " + first_other};
}

Outcome criterion4() {
    auto rep = verify_lemma21_reconstruction(7, 12, 1e-8);
    for (const auto& row : rep.rows)
        if (!row.pass) return {false, row.check + " [" + row.detail + "]"};
    return {true, std::to_string(rep.rows.size()) + " reconstruction rows, n = 7..12"};
}

bool has_negative_c4(const SignedGraph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (d == a || d == b) continue;
                    // C4 a-c-b-d-a.
                    if (!g.adjacent(a, c) || !g.adjacent(c, b) || !g.adjacent(b, d) ||
                        !g.adjacent(d, a))
                        continue;
                    if (g.sign(a, c) * g.sign(c, b) * g.sign(b, d) * g.sign(d, a) < 0) return true;
                }
            }
    return false;
}

Outcome criterion5() {
    std::uint64_t state = 0x5EED5EED;
    long unbalanced_seen = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 6 + (trial & 1);
        SignedGraph g = random_signed_graph(n, 0.5, 0.35, state);
        bool fast = find_unbalanced_kst(g, 2, 2).has_value();
        if (fast != has_negative_c4(g))
            return {false, "disagreement at trial " + std::to_string(trial)};
        if (!is_balanced(g)) ++unbalanced_seen;
    }
    return {true, "10000 samples at n = 6,7 (unbalanced: " + std::to_string(unbalanced_seen) +
                      "), zero disagreements"};
}

Outcome criterion6() {
    SearchConfig cfg;
    cfg.n = 7;
    cfg.mode = SearchMode::GuidedOneNegativeEdge;
    cfg.tol = 1e-9;
    cfg.workers = g_workers;
    auto cert = run_search(cfg);
    if (std::abs(cert.best_lambda1 - 5.0) > 1e-9)
        return {false, "max lambda1 = " + std::to_string(cert.best_lambda1)};
    if (cert.stats.at("maximizer_classes") != 1 ||
        cert.stats.at("maximizer_classes_matching_gamma") != 1)
        return {false,
                "maximizer classes: " + std::to_string(cert.stats.at("maximizer_classes"))};
    if (cert.verdict != Verdict::BoundHolds) return {false, "verdict"};
    if (cert.restriction.empty()) return {false, "restriction not disclosed in certificate"};
    return {true, "max lambda1 = 5 within 1e-9; sole maximizer class is gamma_{7,3}; " +
                      std::to_string(cert.stats.at("signature_classes")) + " signatures scanned"};
}

Outcome criterion7() {
    char buf[160];
    for (auto [n, frozen] : {std::pair{5, kMaxLambda1N5}, std::pair{6, kMaxLambda1N6}}) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.mode = SearchMode::Exhaustive;
        cfg.tol = 1e-9;
        cfg.workers = g_workers;
        auto cert = run_search(cfg);
        if (std::abs(cert.best_lambda1 - frozen) > 1e-9) {
            std::snprintf(buf, sizeof buf, "n=%d: got %.17g, frozen %.17g", n, cert.best_lambda1,
                          frozen);
            return {false, buf};
        }
        auto rerun = run_search(cfg);
        if (certificate_json(cert) != certificate_json(rerun))
            return {false, "certificate bytes differ across reruns at n=" + std::to_string(n)};
    }
    std::snprintf(buf, sizeof buf, "n=5: %.12f, n=6: %.12f, byte-identical reruns", kMaxLambda1N5,
                  kMaxLambda1N6);
    return {true, buf};
}

Outcome criterion8() {
    std::string detail;
    for (int n = 8; n <= 12; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.mode = SearchMode::Anneal;
        cfg.seed = 42;
        cfg.restarts = 64;
        cfg.max_steps = 20000;
        cfg.tol = 1e-6;
        cfg.workers = g_workers;
        auto cert = run_search(cfg);
        if (cert.best_lambda1 > n - 2.0 + 1e-6)
            return {false, "n=" + std::to_string(n) + ": lambda1 " +
                               std::to_string(cert.best_lambda1) + " above bound"};
        if (!cert.matches_gamma_n3)
            return {false, "n=" + std::to_string(n) + ": best graph does not match gamma_{n,3} (" +
                               cert.match_method + ")"};
        detail += (detail.empty() ? "" : ", ") + std::to_string(n) + ":" +
                  std::to_string(cert.best_lambda1).substr(0, 7);
    }
    return {true, "best lambda1 by n -> " + detail};
}

Outcome criterion9() {
    std::uint64_t state = 0xBADC0FFEE;
    int instances = 0;
    long moves_checked = 0;
    for (int attempt = 0; attempt < 200000 && instances < 1000; ++attempt) {
        int n = 6 + static_cast<int>(state % 4);
        SignedGraph g = random_signed_graph(n, 0.55, 0.25, state);
        if (!g.connected() || is_balanced(g)) continue;
        auto [gn, set, x] = normalize_to_nonneg(g);
        if (x.entries.minCoeff() < 1e-4) continue;
        ++instances;
        for (const auto& [m, cand] : perturb_moves(gn, x)) {
            if (m.rule != Move::Rule::AddPositiveEdge && m.rule != Move::Rule::RemoveNegativeEdge)
                continue;
            ++moves_checked;
            double lam = spectrum(cand).lambda1;
            if (!(lam - x.lambda1 > 1e-12))
                return {false, "non-increasing move " + std::string(move_rule_name(m.rule)) +
                                   " at instance " + std::to_string(instances)};
        }
    }
    if (instances < 1000)
        return {false, "only " + std::to_string(instances) + " qualifying instances"};
    return {true, "1000 instances, " + std::to_string(moves_checked) +
                      " moves, all strictly increasing"};
}

Outcome criterion10() {
    std::uint64_t state = 0x10101010;
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 4 + static_cast<int>(state % 9);  // 4..12
        SignedGraph g = random_signed_graph(n, 0.5, 0.3, state);
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        SwitchingSet s{(state >> 17) % (1ULL << n)};
        SignedGraph gs = switched(g, s);
        if (!multiset_close(spectrum(g).eigenvalues, spectrum(gs).eigenvalues, 1e-8))
            return {false, "spectrum multiset differs at trial " + std::to_string(trial)};
        if (is_balanced(g) != is_balanced(gs))
            return {false, "balance differs at trial " + std::to_string(trial)};
        ForbiddenFamily fam = trial % 3 == 0   ? ForbiddenFamily::kst(3, 3)
                              : trial % 3 == 1 ? ForbiddenFamily::kr(4)
                                               : ForbiddenFamily::ck(3);
        if (is_free(g, fam) != is_free(gs, fam))
            return {false, "freeness differs at trial " + std::to_string(trial)};
    }
    return {true, "10000 random (graph, switching) pairs at n <= 12"};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
        if (!std::strcmp(argv[i], "--workers") && i + 1 < argc) g_workers = std::atoi(argv[++i]);
    }

    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries = {
        {1, "exact identities of g_{n,t} at n-2", criterion1},
        {2, "lambda1(gamma_{n,3}) = n-2 via eigensolver and root isolation", criterion2},
        {3, "quotient-factor chains and competitor ordering", criterion3},
        {4, "quotient + residual spectrum reconstruction", criterion4},
        {5, "K_{2,2} detector vs brute-force negative-C4 oracle", criterion5},
        {6, "guided verification at n = 7 (single-negative-edge signatures)", criterion6},
        {7, "exhaustive verification at n = 5, 6 against frozen constants", criterion7},
        {8, "anneal never beats the bound at n = 8..12", criterion8},
        {9, "perturbation moves strictly increase lambda1", criterion9},
        {10, "switching invariance of spectra, balance, and freeness", criterion10},
    };

    int failures = 0;
    for (const auto& e : entries) {
        if (only && e.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s — %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", e.id, e.name,
                    out.detail.c_str(), secs);
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (!only)
        std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
