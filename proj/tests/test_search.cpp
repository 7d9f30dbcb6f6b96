#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "sgt/families.hpp"
#include "sgt/search.hpp"
#include "sgt/verify.hpp"

using namespace sgt;

namespace {

// Full enumeration over every labeled graph and every signature; switching
// classes are not used, which keeps this an independent route.
double oracle_max_lambda1(int n, const ForbiddenFamily& fam) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const int np = static_cast<int>(pairs.size());
    double best = -1e300;
    for (std::uint64_t code = 0; code < (1ULL << np); ++code) {
        const int m = std::popcount(code);
        if (m == 0) continue;
        std::vector<int> ids;
        for (int e = 0; e < np; ++e)
            if ((code >> e) & 1ULL) ids.push_back(e);
        for (std::uint64_t signs = 0; signs < (1ULL << m); ++signs) {
            std::vector<SignedEdge> es;
            for (int i = 0; i < m; ++i)
                es.push_back({pairs[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])].first,
                              pairs[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])].second,
                              ((signs >> i) & 1ULL) ? -1 : +1});
            SignedGraph g(n, std::move(es));
            if (is_balanced(g)) continue;
            if (!is_free(g, fam)) continue;
            best = std::max(best, spectrum(g).lambda1);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("normalize_to_nonneg") {
    SUBCASE("all-positive graphs keep their Perron vector") {
        auto [g, set, x] = normalize_to_nonneg(SignedGraph::complete(5));
        CHECK(set.empty());
        CHECK(x.lambda1 == doctest::Approx(4.0));
        for (int i = 0; i < 5; ++i) CHECK(x.entries(i) > 0);
        CHECK(std::abs(x.entries.norm() - 1.0) < 1e-12);
    }
    SUBCASE("unbalanced triangle") {
        SignedGraph c3(3, {{0, 1, -1}, {0, 2, +1}, {1, 2, +1}});
        auto [g, set, x] = normalize_to_nonneg(c3);
        CHECK(x.lambda1 == doctest::Approx(1.0));
        for (int i = 0; i < 3; ++i) CHECK(x.entries(i) >= -1e-9);
        CHECK(switched(c3, set) == g);
        // Idempotence: renormalizing the output changes nothing more.
        auto [g2, set2, x2] = normalize_to_nonneg(g);
        CHECK(x2.lambda1 == doctest::Approx(x.lambda1));
        for (int i = 0; i < 3; ++i) CHECK(x2.entries(i) >= -1e-9);
    }
    SUBCASE("random graphs get a nonnegative eigenvector") {
        std::uint64_t state = 1;
        for (int trial = 0; trial < 60; ++trial) {
            SignedGraph g = random_signed_graph(8, 0.6, 0.4, state);
            if (!g.connected()) continue;
            auto [gn, set, x] = normalize_to_nonneg(g);
            for (int i = 0; i < 8; ++i) CHECK(x.entries(i) >= -1e-9);
            CHECK((adjacency(gn) * x.entries - x.lambda1 * x.entries).norm() < 1e-8);
        }
    }
    SUBCASE("disconnected input is rejected") {
        CHECK_THROWS_AS(normalize_to_nonneg(SignedGraph(4, {{0, 1, +1}})), Disconnected);
    }
}

TEST_CASE("perturbation moves") {
    SignedGraph gamma = build(FamilySpec::gamma(7, 3));
    auto [g, set, x] = normalize_to_nonneg(gamma);
    auto tagged = perturb_moves(g, x);
    REQUIRE(!tagged.empty());

    bool saw_remove = false, saw_reverse = false;
    for (const auto& [m, cand] : tagged) {
        if (m.rule == Move::Rule::RemoveNegativeEdge) {
            saw_remove = true;
            // Lemma-style strict increase.
            CHECK(spectrum(cand).lambda1 > x.lambda1);
        }
        if (m.rule == Move::Rule::ReverseNegativeEdge) {
            saw_reverse = true;
            // Reversing the unique negative edge balances gamma_{n,3}.
            CHECK(is_balanced(cand));
        }
    }
    CHECK(saw_remove);
    CHECK(saw_reverse);

    // A complete all-positive graph admits no moves at all.
    auto [kg, kset, kx] = normalize_to_nonneg(SignedGraph::complete(6));
    CHECK(enumerate_moves(kg, kx).empty());
}

TEST_CASE("lemma 3.4 strict increase on random instances") {
    std::uint64_t state = 4242;
    int exercised = 0;
    for (int trial = 0; trial < 400 && exercised < 100; ++trial) {
        int n = 6 + static_cast<int>(state % 4);
        SignedGraph g = random_signed_graph(n, 0.55, 0.25, state);
        if (!g.connected() || is_balanced(g)) continue;
        auto [gn, set, x] = normalize_to_nonneg(g);
        double min_entry = x.entries.minCoeff();
        if (min_entry < 1e-4) continue;  // need a strictly positive vector
        ++exercised;
        for (const auto& [m, cand] : perturb_moves(gn, x)) {
            if (m.rule != Move::Rule::AddPositiveEdge &&
                m.rule != Move::Rule::RemoveNegativeEdge &&
                m.rule != Move::Rule::ReverseNegativeEdge)
                continue;
            CHECK(spectrum(cand).lambda1 > x.lambda1 + 1e-12);
        }
    }
    CHECK(exercised >= 40);
}

TEST_CASE("bound oracles") {
    CHECK(bound_c3free(7) == doctest::Approx(0.5 * (std::sqrt(41.0) + 3.0)));
    CHECK(bound_c3free(3) == doctest::Approx(0.0));
    CHECK_THROWS_AS(bound_c3free(2), PreconditionViolated);

    SignedGraph gamma = build(FamilySpec::gamma(7, 3));
    CHECK(bound_k4free_check(gamma));
    CHECK(spectrum(gamma).rho == doctest::Approx(5.0).epsilon(1e-9));

    CHECK_THROWS_AS(bound_k4free_check(SignedGraph::complete(8)), PreconditionViolated);
    auto k4neg = SignedGraph::complete(8).edges();
    k4neg[0].sign = -1;
    CHECK_THROWS_AS(bound_k4free_check(SignedGraph(8, std::move(k4neg))), PreconditionViolated);
}

TEST_CASE("search config validation") {
    SearchConfig cfg;
    cfg.n = 6;
    cfg.mode = SearchMode::GuidedOneNegativeEdge;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.mode = SearchMode::Exhaustive;
    cfg.n = 7;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.n = 5;
    cfg.workers = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.workers = 2;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("exhaustive census matches the closed-form class count at n=4") {
    SearchConfig cfg;
    cfg.n = 4;
    cfg.mode = SearchMode::Exhaustive;
    auto cert = run_search(cfg);

    // Independent count: sum over all labeled graphs of 2^(m-n+c).
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) pairs.push_back({u, v});
    std::uint64_t expected = 0;
    for (std::uint64_t code = 0; code < 64; ++code) {
        int m = std::popcount(code);
        // Component count by label spreading.
        std::vector<int> comp = {0, 1, 2, 3};
        for (int e = 0; e < 6; ++e)
            if ((code >> e) & 1ULL) {
                int a = comp[static_cast<std::size_t>(pairs[static_cast<std::size_t>(e)].first)];
                int b = comp[static_cast<std::size_t>(pairs[static_cast<std::size_t>(e)].second)];
                if (a != b)
                    for (auto& c : comp)
                        if (c == b) c = a;
            }
        std::vector<int> uniq = comp;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        int c = static_cast<int>(uniq.size());
        if (m == 0) continue;  // the empty graph contributes no edges
        expected += 1ULL << (m - 4 + c);
    }
    CHECK(cert.stats.at("signature_classes") == expected);
}

TEST_CASE("exhaustive search at n=5 equals the full-enumeration oracle") {
    double oracle = oracle_max_lambda1(5, ForbiddenFamily::kst(3, 3));

    SearchConfig cfg;
    cfg.n = 5;
    cfg.mode = SearchMode::Exhaustive;
    cfg.tol = 1e-9;
    auto cert = run_search(cfg);
    CHECK(std::abs(cert.best_lambda1 - oracle) < 1e-9);
    CHECK(cert.verdict == Verdict::BoundHolds);

    // Determinism: identical config gives identical certificate bytes.
    auto cert2 = run_search(cfg);
    CHECK(certificate_json(cert) == certificate_json(cert2));

    // Worker split does not change the outcome.
    cfg.workers = 2;
    auto cert3 = run_search(cfg);
    CHECK(cert3.best_lambda1 == cert.best_lambda1);
    CHECK(cert3.stats.at("signature_classes") == cert.stats.at("signature_classes"));

    MESSAGE("n=5 max lambda1 = ", cert.best_lambda1);
}

TEST_CASE("anneal smoke run at n=8") {
    SearchConfig cfg;
    cfg.n = 8;
    cfg.mode = SearchMode::Anneal;
    cfg.seed = 42;
    cfg.restarts = 4;
    cfg.max_steps = 1500;
    cfg.tol = 1e-6;
    cfg.workers = 2;
    auto cert = run_search(cfg);
    CHECK(cert.verdict == Verdict::BoundHolds);
    CHECK(cert.best_lambda1 <= 6.0 + 1e-6);
    CHECK(cert.matches_gamma_n3);
    CHECK(cert.match_method == "canonical-key");

    auto cert2 = run_search(cfg);
    CHECK(certificate_json(cert) == certificate_json(cert2));
}

TEST_CASE("hill climb improves from a random feasible start") {
    SearchConfig cfg;
    cfg.n = 7;
    cfg.mode = SearchMode::HillClimb;
    cfg.seed = 7;
    cfg.restarts = 3;
    cfg.max_steps = 1200;
    cfg.tol = 1e-6;
    auto cert = run_search(cfg);
    CHECK(cert.best_lambda1 <= 5.0 + 1e-6);
    CHECK(cert.best_lambda1 > 3.0);
    CHECK_FALSE(is_balanced(cert.best_graph));
    CHECK(is_free(cert.best_graph, cert.config.family));
}

TEST_CASE("certificate serialization carries the graph and stats") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.mode = SearchMode::Exhaustive;
    auto cert = run_search(cfg);
    std::string text = certificate_json(cert);
    CHECK(text.find("\"best_graph_sg\"") != std::string::npos);
    CHECK(text.find("\"verdict\"") != std::string::npos);
    CHECK(histogram_csv(cert).rfind("bucket_lo,count\n", 0) == 0);
    CHECK(histogram_csv(cert).size() > 20);
}
