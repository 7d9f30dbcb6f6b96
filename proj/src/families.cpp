#include "sgt/families.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace sgt {

const char* family_name(Family f) {
    switch (f) {
        case Family::GammaNT: return "gamma";
        case Family::U: return "u";
        case Family::Z1: return "z1";
        case Family::Z2: return "z2";
        case Family::W: return "w";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "gamma") return Family::GammaNT;
    if (s == "u") return Family::U;
    if (s == "z1") return Family::Z1;
    if (s == "z2") return Family::Z2;
    if (s == "w") return Family::W;
    return std::nullopt;
}

void FamilySpec::validate() const {
    if (family == Family::GammaNT) {
        if (!(n >= t && t >= 2))
            throw InvalidFamily("gamma requires n >= t >= 2");
    } else {
        if (n < 7) throw InvalidFamily(std::string(family_name(family)) + " requires n >= 7");
    }
}

namespace {

SignedGraph graph_from_adjacency(const IntMatrix& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<SignedEdge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a(u, v) != 0) es.push_back({u, v, a(u, v)});
    return SignedGraph(n, std::move(es));
}

void fill_clique(IntMatrix& a, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) a(vs[i], vs[j]) = a(vs[j], vs[i]) = 1;
}

std::vector<int> range_vec(int lo, int hi) {  // [lo, hi)
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
}

void fill_bipartite(IntMatrix& a, const std::vector<int>& xs, const std::vector<int>& ys) {
    for (int x : xs)
        for (int y : ys) a(x, y) = a(y, x) = 1;
}

// The block adjacency matrices, transcribed block by block.
// Vertices follow the v_1..v_n naming shifted to 0..n-1.
IntMatrix family_adjacency(const FamilySpec& spec) {
    const int n = spec.n;
    IntMatrix a = IntMatrix::Zero(n, n);
    auto sym = [&](int u, int v, int s) { a(u, v) = s; a(v, u) = s; };
    switch (spec.family) {
        case Family::GammaNT: {
            fill_clique(a, range_vec(0, n - 1));
            const int u = n - 1;
            for (int j = 0; j < spec.t - 1; ++j) sym(u, j, j == 0 ? -1 : +1);
            break;
        }
        case Family::U: {
            // [ 0 -1 j3' 0' ; -1 0 j3' 0' ; j3 j3 (J-I)3 J ; 0 0 J (J-I) ]
            const std::vector<int> b3 = {2, 3, 4}, tail = range_vec(5, n);
            sym(0, 1, -1);
            fill_bipartite(a, {0}, b3);
            fill_bipartite(a, {1}, b3);
            fill_clique(a, b3);
            fill_bipartite(a, b3, tail);
            fill_clique(a, tail);
            break;
        }
        case Family::Z1: {
            // [ 0 -1 j2' 1 0 0' ; -1 0 j2' 0 1 0' ; j2 j2 (J-I)2 j2 j2 J ;
            //   1 0 j2' 0 0 j' ; 0 1 j2' 0 0 j' ; 0 0 J j j (J-I) ]
            const std::vector<int> b3 = {2, 3}, tail = range_vec(6, n);
            sym(0, 1, -1);
            fill_bipartite(a, {0}, b3);
            sym(0, 4, 1);
            fill_bipartite(a, {1}, b3);
            sym(1, 5, 1);
            fill_clique(a, b3);
            fill_bipartite(a, b3, {4});
            fill_bipartite(a, b3, {5});
            fill_bipartite(a, b3, tail);
            fill_bipartite(a, {4}, tail);
            fill_bipartite(a, {5}, tail);
            fill_clique(a, tail);
            break;
        }
        case Family::Z2: {
            // Rows v1..v6 then the tail block, straight from the display.
            const std::vector<int> tail = range_vec(6, n);
            sym(0, 1, -1);
            sym(0, 2, 1); sym(0, 3, 1); sym(0, 4, 1);
            sym(1, 2, 1); sym(1, 3, 1); sym(1, 5, 1);
            sym(2, 3, 1); sym(2, 4, 1); sym(2, 5, 1);
            sym(4, 5, 1);
            for (int v : {2, 3, 4, 5}) fill_bipartite(a, {v}, tail);
            fill_clique(a, tail);
            break;
        }
        case Family::W: {
            // [ 0 -1 1 1 1 j' ; -1 0 1 1 0 0' ; 1 1 0 1 1 j' ;
            //   1 1 1 0 1 0' ; 1 0 1 1 0 j' ; j 0 j 0 j (J-I) ]
            const std::vector<int> tail = range_vec(5, n);
            sym(0, 1, -1);
            sym(0, 2, 1); sym(0, 3, 1); sym(0, 4, 1);
            sym(1, 2, 1); sym(1, 3, 1);
            sym(2, 3, 1); sym(2, 4, 1);
            sym(3, 4, 1);
            for (int v : {0, 2, 4}) fill_bipartite(a, {v}, tail);
            fill_clique(a, tail);
            break;
        }
    }
    return a;
}

}  // namespace

SignedGraph build(const FamilySpec& spec) {
    spec.validate();
    SignedGraph g = graph_from_adjacency(family_adjacency(spec));
    SignedGraph cross = build_from_edge_lists(spec);
    if (!(g == cross))
        std::fprintf(stderr,
                     "warning: %s n=%d: block-matrix and edge-list constructions disagree\n",
                     family_name(spec.family), spec.n);
    return g;
}

SignedGraph build_from_edge_lists(const FamilySpec& spec) {
    spec.validate();
    const int n = spec.n;
    IntMatrix a = IntMatrix::Zero(n, n);
    auto sym = [&](int u, int v, int s) { a(u, v) = s; a(v, u) = s; };
    switch (spec.family) {
        case Family::GammaNT: {
            fill_clique(a, range_vec(0, n - 1));
            for (int j = 0; j < spec.t - 1; ++j) sym(n - 1, j, j == 0 ? -1 : +1);
            break;
        }
        case Family::U: {
            // K_{n-2} on v3..vn plus v1, v2 and seven edges, v1v2 negative.
            fill_clique(a, range_vec(2, n));
            sym(0, 1, -1);
            for (int b : {2, 3, 4}) { sym(0, b, 1); sym(1, b, 1); }
            break;
        }
        case Family::Z1: {
            // Two K_{n-3}: {v3,v4,v5,v7..vn} and {v3,v4,v6..vn}.
            std::vector<int> c1 = {2, 3, 4};
            for (int i = 6; i < n; ++i) c1.push_back(i);
            std::vector<int> c2 = {2, 3};
            for (int i = 5; i < n; ++i) c2.push_back(i);
            fill_clique(a, c1);
            fill_clique(a, c2);
            sym(0, 1, -1);
            sym(0, 2, 1); sym(0, 3, 1); sym(0, 4, 1);
            sym(1, 2, 1); sym(1, 3, 1); sym(1, 5, 1);
            break;
        }
        case Family::Z2: {
            // Two K_{n-3}: {v3,v5..vn} and {v3,v4,v7..vn}.
            std::vector<int> c1 = {2};
            for (int i = 4; i < n; ++i) c1.push_back(i);
            std::vector<int> c2 = {2, 3};
            for (int i = 6; i < n; ++i) c2.push_back(i);
            fill_clique(a, c1);
            fill_clique(a, c2);
            sym(0, 1, -1);
            sym(0, 2, 1); sym(0, 3, 1); sym(0, 4, 1);
            sym(1, 2, 1); sym(1, 3, 1); sym(1, 5, 1);
            break;
        }
        case Family::W: {
            // K_{n-2} on {v1,v3,v5..vn} plus v2, v4 and six edges.
            std::vector<int> clique = {0, 2, 4};
            for (int i = 5; i < n; ++i) clique.push_back(i);
            fill_clique(a, clique);
            sym(0, 1, -1);
            sym(1, 2, 1); sym(1, 3, 1); sym(0, 3, 1); sym(2, 3, 1); sym(3, 4, 1);
            break;
        }
    }
    return graph_from_adjacency(a);
}

namespace {

struct FlaggedPartition {
    VertexPartition part;
    std::vector<char> clique_diagonal;  // positive clique block, shift -1
};

FlaggedPartition flagged_partition(const FamilySpec& spec) {
    spec.validate();
    const int n = spec.n;
    FlaggedPartition fp;
    auto add = [&](std::vector<int> block, bool clique) {
        if (block.empty()) return;
        fp.part.blocks.push_back(std::move(block));
        fp.clique_diagonal.push_back(clique);
    };
    switch (spec.family) {
        case Family::GammaNT:
            add({n - 1}, false);                       // u
            add({0}, false);                           // v1
            add(range_vec(1, spec.t - 1), true);       // v2..v_{t-1}
            add(range_vec(spec.t - 1, n - 1), true);   // v_t..v_{n-1}
            break;
        case Family::U:
            add({0}, false);
            add({1}, false);
            add({2, 3, 4}, true);
            add(range_vec(5, n), true);
            break;
        case Family::Z1:
            add({0}, false);
            add({1}, false);
            add({2, 3}, true);
            add({4}, false);
            add({5}, false);
            add(range_vec(6, n), true);
            break;
        case Family::Z2:
            for (int v = 0; v < 6; ++v) add({v}, false);
            add(range_vec(6, n), true);
            break;
        case Family::W:
            for (int v = 0; v < 5; ++v) add({v}, false);
            add(range_vec(5, n), true);
            break;
    }
    return fp;
}

}  // namespace

VertexPartition canonical_partition(const FamilySpec& spec) {
    return flagged_partition(spec).part;
}

RationalMatrix family_shifts(const FamilySpec& spec) {
    FlaggedPartition fp = flagged_partition(spec);
    RationalMatrix shifts = cancelling_shifts(adjacency_int(build(spec)), fp.part);
    for (std::size_t i = 0; i < fp.clique_diagonal.size(); ++i)
        if (fp.clique_diagonal[i] && fp.part.blocks[i].size() == 1)
            shifts(static_cast<int>(i), static_cast<int>(i)) = Rational(-1);
    return shifts;
}

Polynomial g_poly(int n, int t) {
    if (!(n >= t && t >= 2)) throw InvalidFamily("g_poly requires n >= t >= 2");
    BigInt N(n), T(t);
    return Polynomial({-T * T + (N + 4) * T - N - 7, -(N + T - 3), -(N - 3), BigInt(1)});
}

Polynomial family_lambda1_factor(const FamilySpec& spec) {
    spec.validate();
    const BigInt N(spec.n);
    switch (spec.family) {
        case Family::GammaNT:
            return g_poly(spec.n, spec.t);
        case Family::U:
            return Polynomial({5 * N - 33, 1 - 2 * N, 5 - N, BigInt(1)});
        case Family::Z1:
            return Polynomial({7 * N - 53, BigInt(-21), 14 - 4 * N, 7 - N, BigInt(1)});
        case Family::Z2:
            return Polynomial({18 - 2 * N, 6 * N - 36, N - 21, 15 - 4 * N, 7 - N, BigInt(1)});
        case Family::W:
            return Polynomial({33 - 5 * N, 7 * N - 25, 5 * N - 31, 1 - 2 * N, 5 - N, BigInt(1)});
    }
    throw InvalidFamily("unknown family");
}

Polynomial family_lambda1_cofactor(const FamilySpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::GammaNT:  // charpoly(Q) = (x+1) g_{n,t}(x)
        case Family::W:
            return Polynomial({BigInt(1), BigInt(1)});
        case Family::U:
            return Polynomial({BigInt(-1), BigInt(1)});
        case Family::Z1:
            return Polynomial({BigInt(-1), BigInt(-1), BigInt(1)});
        case Family::Z2:
            return Polynomial({BigInt(-2), BigInt(0), BigInt(1)});
    }
    throw InvalidFamily("unknown family");
}

Polynomial family_charpoly_table(const FamilySpec& spec) {
    return family_lambda1_factor(spec) * family_lambda1_cofactor(spec);
}

double family_lambda1_exact(const FamilySpec& spec, double tol) {
    spec.validate();
    const int n = spec.n;
    Polynomial factor = family_lambda1_factor(spec);
    double lo, hi;
    switch (spec.family) {
        case Family::GammaNT:
            lo = n - 2.75;
            hi = n - 1.0;
            break;
        case Family::U:
        case Family::W:
            lo = n - 3.5;  // both contain (K_{n-2},+), so lambda1 >= n-3
            hi = n - 2.0;
            break;
        default:
            lo = n - 4.5;  // Z1, Z2 contain (K_{n-3},+)
            hi = n - 2.0;
            break;
    }
    double root = largest_real_root(factor, lo, hi, tol);
    // Snap to an exact integer root when integer evaluation certifies one.
    double nearest = std::round(root);
    if (std::abs(root - nearest) <= 2 * tol && factor.eval(BigInt(static_cast<long>(nearest))) == 0)
        return nearest;
    return root;
}

}  // namespace sgt
