#pragma once

#include <Eigen/Dense>

#include <vector>

#include "sgt/polynomial.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

template <class Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RealMatrix = SquareMatrix<double>;
using IntMatrix = SquareMatrix<int>;
/// Exact-arithmetic matrix. Storage only; arithmetic on these is done with
/// explicit loops (expression templates and multiprecision scalars disagree).
using RationalMatrix = SquareMatrix<Rational>;

/// Signed adjacency matrix with entries in {-1, 0, +1} and zero diagonal.
IntMatrix adjacency_int(const SignedGraph& g);
RealMatrix adjacency(const SignedGraph& g);

/// Full eigendecomposition of a real symmetric matrix, eigenvalues in
/// non-increasing order. Cyclic Jacobi: deterministic for identical input.
struct EigenDecomposition {
    Eigen::VectorXd values;
    RealMatrix vectors;  // columns; empty unless requested
    int sweeps = 0;
};

EigenDecomposition jacobi_eigen(const RealMatrix& m, bool with_vectors = false,
                                int max_sweeps = 100);

struct SpectrumReport {
    Eigen::VectorXd eigenvalues;  // non-increasing
    double lambda1 = 0;
    double rho = 0;
    double tol = 1e-10;
};

SpectrumReport make_spectrum_report(Eigen::VectorXd sorted_nonincreasing, double tol);
SpectrumReport spectrum(const RealMatrix& m, double tol = 1e-10);
SpectrumReport spectrum(const SignedGraph& g, double tol = 1e-10);

/// Ordered blocks of vertices covering 0..n-1, pairwise disjoint, nonempty.
struct VertexPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int order() const;
    void validate(int n) const;
    static VertexPartition singletons(int n);
};

/// Average-row-sum matrix of the blocks; `equitable` is set iff every block
/// has a constant row sum (exact integer comparison).
struct QuotientMatrix {
    RationalMatrix q;
    bool equitable = false;
};

QuotientMatrix quotient(const IntMatrix& m, const VertexPartition& p);

/// Eigenvalues of the quotient, computed on the symmetrization
/// D^{1/2} Q D^{-1/2} (D = block sizes); valid for quotients of symmetric
/// matrices. Non-increasing order.
Eigen::VectorXd quotient_eigenvalues(const QuotientMatrix& q, const VertexPartition& p);

/// Exact characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
RationalPolynomial char_poly(const RationalMatrix& a);
RationalPolynomial char_poly(const IntMatrix& a);

/// Shift matrix that cancels every block of `m` to 0 or -I: off-diagonal
/// blocks must be constant c*J, diagonal blocks c*(J-I). Throws when a block
/// has no such form.
RationalMatrix cancelling_shifts(const IntMatrix& m, const VertexPartition& p);

/// Spectrum of m + sum_{ij} shifts(i,j) * J over block (i,j). Requires an
/// equitable partition and symmetric shifts.
SpectrumReport residual_spectrum(const IntMatrix& m, const VertexPartition& p,
                                 const RationalMatrix& shifts, double tol = 1e-10);

/// Reconstructs the full spectrum as Spec(Q) together with the eigenvalues of
/// the shifted matrix minus the block eigenvalues it absorbs, and checks the
/// result against the direct spectrum. Throws MultisetMismatch on disagreement
/// beyond tol (that signals a bug, not a math error).
SpectrumReport spectrum_via_quotient(const IntMatrix& m, const VertexPartition& p,
                                     const RationalMatrix& shifts, double tol = 1e-8);

/// Sorted-descending multisets equal within tol, compared elementwise.
bool multiset_close(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol);

/// Remove each entry of `part` from `full` (nearest unused match within tol);
/// throws MultisetMismatch when a value has no match.
Eigen::VectorXd multiset_subtract(const Eigen::VectorXd& full, const Eigen::VectorXd& part,
                                  double tol);

}  // namespace sgt
