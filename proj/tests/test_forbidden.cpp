#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgt/families.hpp"
#include "sgt/forbidden.hpp"
#include "sgt/verify.hpp"

using namespace sgt;

namespace {

SignedGraph complete_bipartite(int s, int t, int negatives = 0) {
    std::vector<SignedEdge> es;
    int placed = 0;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < t; ++b) {
            int sign = placed < negatives ? -1 : +1;
            ++placed;
            es.push_back({a, s + b, sign});
        }
    return SignedGraph(s + t, std::move(es));
}

SignedGraph complete_one_negative(int n) {
    auto g = SignedGraph::complete(n).edges();
    g[0].sign = -1;
    return SignedGraph(n, std::move(g));
}

// Brute-force oracle: any 4 vertices hosting a C4 with odd negative count?
bool has_negative_c4(const SignedGraph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(c, d) ||
                        !g.adjacent(d, a))
                        continue;
                    if (g.sign(a, b) * g.sign(b, c) * g.sign(c, d) * g.sign(d, a) < 0)
                        return true;
                }
    return false;
}

}  // namespace

TEST_CASE("unbalanced K_{s,t} detection") {
    CHECK_FALSE(find_unbalanced_kst(complete_bipartite(3, 3), 3, 3).has_value());

    auto w = find_unbalanced_kst(complete_bipartite(3, 3, 1), 3, 3);
    REQUIRE(w.has_value());
    CHECK(witness_valid(complete_bipartite(3, 3, 1), ForbiddenFamily::kst(3, 3), *w));
    CHECK(w->certificate_cycle.size() == 4);

    for (int n = 7; n <= 10; ++n)
        CHECK_FALSE(find_unbalanced_kst(build(FamilySpec::gamma(n, 3)), 3, 3).has_value());

    // K6 with one negative edge hosts an unbalanced K_{3,3}.
    auto k6 = find_unbalanced_kst(complete_one_negative(6), 3, 3);
    REQUIRE(k6.has_value());
    CHECK(witness_valid(complete_one_negative(6), ForbiddenFamily::kst(3, 3), *k6));

    // Asymmetric pattern: K_{2,3} with a negative edge, found in both roles.
    SignedGraph g23 = complete_bipartite(2, 3, 1);
    CHECK(find_unbalanced_kst(g23, 2, 3).has_value());
    CHECK(find_unbalanced_kst(g23, 2, 2).has_value());
    CHECK_FALSE(find_unbalanced_kst(g23, 3, 3).has_value());

    CHECK_THROWS_AS(find_unbalanced_kst(g23, 1, 3), InvariantViolation);
}

TEST_CASE("unbalanced K_r detection") {
    CHECK_FALSE(find_unbalanced_kr(SignedGraph::complete(4), 4).has_value());

    auto w = find_unbalanced_kr(complete_one_negative(4), 4);
    REQUIRE(w.has_value());
    CHECK(witness_valid(complete_one_negative(4), ForbiddenFamily::kr(4), *w));
    CHECK(w->certificate_cycle.size() == 3);

    // In gamma_{7,3} the negative edge meets u of degree 2, so no K4 is unbalanced.
    CHECK_FALSE(find_unbalanced_kr(build(FamilySpec::gamma(7, 3)), 4).has_value());
    // But the negative triangle itself is an unbalanced K3.
    CHECK(find_unbalanced_kr(build(FamilySpec::gamma(7, 3)), 3).has_value());

    CHECK_THROWS_AS(find_unbalanced_kr(SignedGraph::complete(4), 2), InvariantViolation);
}

TEST_CASE("unbalanced C_k detection") {
    SignedGraph balanced(5, {{0, 1, -1}, {1, 2, -1}, {0, 2, +1}, {2, 3, +1}, {3, 4, +1},
                             {2, 4, +1}});
    REQUIRE(is_balanced(balanced));
    for (int k = 3; k <= 5; ++k) CHECK_FALSE(find_unbalanced_ck(balanced, k).has_value());

    SignedGraph c3(3, {{0, 1, -1}, {0, 2, +1}, {1, 2, +1}});
    auto w3 = find_unbalanced_ck(c3, 3);
    REQUIRE(w3.has_value());
    CHECK(w3->vertices == std::vector<int>{0, 1, 2});

    auto wg = find_unbalanced_ck(build(FamilySpec::gamma(7, 3)), 3);
    REQUIRE(wg.has_value());
    std::vector<int> sorted = wg->vertices;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 6});  // v1, v2, u

    // Quadrilateral with one negative edge.
    SignedGraph c4(4, {{0, 1, -1}, {1, 2, +1}, {2, 3, +1}, {0, 3, +1}});
    CHECK_FALSE(find_unbalanced_ck(c4, 3).has_value());
    auto w4 = find_unbalanced_ck(c4, 4);
    REQUIRE(w4.has_value());
    CHECK(witness_valid(c4, ForbiddenFamily::ck(4), *w4));

    // Unbalanced 5-cycles inside a dense graph.
    CHECK(find_unbalanced_ck(complete_one_negative(7), 5).has_value());

    // A balanced graph that still carries negative edges forces the DFS to
    // enumerate every 9-cycle of K12, which trips the work cap.
    SignedGraph balanced_k12 = switched(SignedGraph::complete(12), SwitchingSet::of({0}));
    REQUIRE(balanced_k12.negative_edge_count() == 11);
    CHECK_THROWS_AS(find_unbalanced_ck(balanced_k12, 9, 1000), WorkCapExceeded);
    CHECK_THROWS_AS(find_unbalanced_ck(c4, 2), InvariantViolation);
}

TEST_CASE("is_free dispatch and vacuous cases") {
    CHECK(is_free(build(FamilySpec::u(8)), ForbiddenFamily::kst(3, 3)));
    CHECK_FALSE(is_free(complete_one_negative(6), ForbiddenFamily::kst(3, 3)));
    CHECK(is_free(SignedGraph::complete(9), ForbiddenFamily::kst(2, 2)));  // balanced
    CHECK(is_free(SignedGraph(4, {}), ForbiddenFamily::ck(3)));
    // Too few vertices for the pattern.
    SignedGraph small(4, {{0, 1, -1}, {0, 2, +1}, {1, 2, +1}});
    CHECK(is_free(small, ForbiddenFamily::kst(3, 3)));
}

TEST_CASE("detection agrees with the brute-force C4 oracle") {
    std::uint64_t state = 2024;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 5 + static_cast<int>(state % 3);
        SignedGraph g = random_signed_graph(n, 0.55, 0.35, state);
        bool fast = find_unbalanced_kst(g, 2, 2).has_value();
        CHECK(fast == has_negative_c4(g));
    }
}

TEST_CASE("witnesses survive adding a disjoint positive edge") {
    std::uint64_t state = 515;
    int exercised = 0;
    for (int trial = 0; trial < 300 && exercised < 60; ++trial) {
        SignedGraph g = random_signed_graph(9, 0.45, 0.35, state);
        auto w = find_unbalanced_kst(g, 2, 2);
        if (!w) continue;
        // Add a positive edge avoiding the witness vertices.
        bool added = false;
        SignedGraph g2 = g;
        for (int u = 0; u < 9 && !added; ++u)
            for (int v = u + 1; v < 9 && !added; ++v) {
                bool inside = false;
                for (int x : w->vertices) inside |= (x == u || x == v);
                if (inside || g.adjacent(u, v)) continue;
                auto es = g.edges();
                es.push_back({u, v, +1});
                g2 = SignedGraph(9, std::move(es));
                added = true;
            }
        if (!added) continue;
        ++exercised;
        CHECK(witness_valid(g2, ForbiddenFamily::kst(2, 2), *w));
        CHECK_FALSE(is_free(g2, ForbiddenFamily::kst(2, 2)));
    }
    CHECK(exercised >= 30);
}

TEST_CASE("freeness is switching invariant") {
    std::uint64_t state = 99991;
    for (int trial = 0; trial < 150; ++trial) {
        int n = 6 + static_cast<int>(state % 3);
        SignedGraph g = random_signed_graph(n, 0.5, 0.3, state);
        SwitchingSet s{state % (1ULL << n)};
        for (auto fam : {ForbiddenFamily::kst(2, 2), ForbiddenFamily::kst(3, 3),
                         ForbiddenFamily::kr(4), ForbiddenFamily::ck(3)})
            CHECK(is_free(g, fam) == is_free(switched(g, s), fam));
    }
}

TEST_CASE("family parsing") {
    auto f = ForbiddenFamily::parse("kst:3,3");
    REQUIRE(f.has_value());
    CHECK(f->kind == ForbiddenFamily::Kind::CompleteBipartite);
    CHECK(ForbiddenFamily::parse("kr:4")->s == 4);
    CHECK(ForbiddenFamily::parse("ck:5")->s == 5);
    CHECK_FALSE(ForbiddenFamily::parse("nope").has_value());
    CHECK(ForbiddenFamily::kst(3, 3).str() == "kst:3,3");
}
