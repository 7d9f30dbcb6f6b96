#pragma once

#include <optional>
#include <string>

#include "sgt/polynomial.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/spectra.hpp"

namespace sgt {

/// The named extremal candidates: GammaNT is K_{n-1} plus a vertex u joined
/// to v_1..v_{t-1} with u~v_1 the unique negative edge; U, Z1, Z2, W are the
/// near-extremal graphs with two attachment vertices.
enum class Family { GammaNT, U, Z1, Z2, W };

const char* family_name(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct FamilySpec {
    Family family = Family::GammaNT;
    int n = 0;
    int t = 0;  // GammaNT only

    static FamilySpec gamma(int n, int t) { return {Family::GammaNT, n, t}; }
    static FamilySpec u(int n) { return {Family::U, n, 0}; }
    static FamilySpec z1(int n) { return {Family::Z1, n, 0}; }
    static FamilySpec z2(int n) { return {Family::Z2, n, 0}; }
    static FamilySpec w(int n) { return {Family::W, n, 0}; }

    /// GammaNT: n >= t >= 2. Others: n >= 7. Throws InvalidFamily.
    void validate() const;
};

/// Build the family graph. U, Z1, Z2, W are written straight from their
/// block adjacency matrices; the edge-list description is available as
/// build_from_edge_lists for cross-checking, and a mismatch between the two
/// is reported on stderr rather than silently resolved.
SignedGraph build(const FamilySpec& spec);

/// Same graphs assembled from their clique-plus-attachment edge lists.
SignedGraph build_from_edge_lists(const FamilySpec& spec);

/// The equitable partition used for each family's quotient matrix:
/// GammaNT {u},{v1},{v2..v_{t-1}},{v_t..v_{n-1}} (empty blocks dropped);
/// U 4 blocks; Z1 6; Z2 7; W 6.
VertexPartition canonical_partition(const FamilySpec& spec);

/// Block shifts that cancel the family adjacency to diag(0.., -I..): inferred
/// from the matrix where blocks have two or more vertices, and forced to -1
/// on clique blocks that degenerate to a single vertex (where c*(J-I) carries
/// no information).
RationalMatrix family_shifts(const FamilySpec& spec);

/// g_{n,t}(x) = x^3 - (n-3)x^2 - (n+t-3)x - t^2 + (n+4)t - n - 7.
/// lambda_1(GammaNT) is its largest root.
Polynomial g_poly(int n, int t);

/// The factor of the quotient characteristic polynomial that carries
/// lambda_1 (the cubic/quartic/quintic with coefficients linear in n).
Polynomial family_lambda1_factor(const FamilySpec& spec);

/// The remaining factor of the quotient characteristic polynomial.
Polynomial family_lambda1_cofactor(const FamilySpec& spec);

/// Full quotient characteristic polynomial (factor times cofactor); the
/// coefficient table is independent of the quotient-matrix route, so the two
/// can be compared to guard against transcription drift.
Polynomial family_charpoly_table(const FamilySpec& spec);

/// lambda_1 as the largest real root of the family's factor, bracketed and
/// bisected with exact sign information. For GammaNT with t = 3 the value is
/// exactly n - 2 (certified by integer evaluation) and returned as such.
double family_lambda1_exact(const FamilySpec& spec, double tol = 1e-10);

}  // namespace sgt
