#include "sgt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sgt {

IntMatrix adjacency_int(const SignedGraph& g) {
    IntMatrix a = IntMatrix::Zero(g.order(), g.order());
    for (const auto& e : g.edges()) {
        a(e.u, e.v) = e.sign;
        a(e.v, e.u) = e.sign;
    }
    return a;
}

RealMatrix adjacency(const SignedGraph& g) { return adjacency_int(g).cast<double>(); }

EigenDecomposition jacobi_eigen(const RealMatrix& m, bool with_vectors, int max_sweeps) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw InvariantViolation("jacobi_eigen: matrix must be square");
    const double scale = m.norm();
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
        throw InvariantViolation("jacobi_eigen: matrix must be symmetric");

    RealMatrix a = m;
    RealMatrix v;
    if (with_vectors) v = RealMatrix::Identity(n, n);

    auto off_norm = [&]() {
        double s = 0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        return std::sqrt(2.0 * s);
    };

    const double target = 1e-13 * std::max(scale, 1e-300);
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_norm() <= target) break;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp - s * (akq + tau * akp);
                    a(p, k) = a(k, p);
                    a(k, q) = akq + s * (akp - tau * akq);
                    a(q, k) = a(k, q);
                }
                if (with_vectors) {
                    for (Eigen::Index k = 0; k < n; ++k) {
                        const double vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = vkp - s * (vkq + tau * vkp);
                        v(k, q) = vkq + s * (vkp - tau * vkq);
                    }
                }
            }
        }
    }
    if (off_norm() > target)
        throw ConvergenceFailure("jacobi_eigen: sweep cap reached before convergence");

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return a(i, i) > a(j, j); });

    EigenDecomposition out;
    out.values.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) out.values(i) = a(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i)]);
    out.sweeps = sweep;
    if (with_vectors) {
        out.vectors.resize(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            Eigen::VectorXd col = v.col(idx[static_cast<std::size_t>(i)]);
            // Fix the sign: the entry of largest magnitude is made positive.
            Eigen::Index arg = 0;
            for (Eigen::Index k = 1; k < n; ++k)
                if (std::abs(col(k)) > std::abs(col(arg))) arg = k;
            if (col(arg) < 0) col = -col;
            out.vectors.col(i) = col;
        }
    }
    return out;
}

SpectrumReport make_spectrum_report(Eigen::VectorXd sorted, double tol) {
    SpectrumReport r;
    r.tol = tol;
    r.eigenvalues = std::move(sorted);
    const auto n = r.eigenvalues.size();
    r.lambda1 = n ? r.eigenvalues(0) : 0.0;
    r.rho = n ? std::max(std::abs(r.eigenvalues(0)), std::abs(r.eigenvalues(n - 1))) : 0.0;
    return r;
}

SpectrumReport spectrum(const RealMatrix& m, double tol) {
    return make_spectrum_report(jacobi_eigen(m).values, tol);
}

SpectrumReport spectrum(const SignedGraph& g, double tol) { return spectrum(adjacency(g), tol); }

int VertexPartition::order() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

void VertexPartition::validate(int n) const {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw InvariantViolation("partition block is empty");
        for (int v : b) {
            if (v < 0 || v >= n) throw InvariantViolation("partition vertex out of range");
            if (seen[static_cast<std::size_t>(v)]) throw InvariantViolation("partition blocks overlap");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (char c : seen)
        if (!c) throw InvariantViolation("partition does not cover all vertices");
}

VertexPartition VertexPartition::singletons(int n) {
    VertexPartition p;
    p.blocks.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p.blocks[static_cast<std::size_t>(v)] = {v};
    return p;
}

QuotientMatrix quotient(const IntMatrix& m, const VertexPartition& p) {
    const int n = static_cast<int>(m.rows());
    p.validate(n);
    const int k = p.block_count();
    QuotientMatrix out;
    out.q.setConstant(k, k, Rational(0));
    out.equitable = true;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            long first = 0;
            bool constant = true;
            long total = 0;
            for (std::size_t r = 0; r < p.blocks[static_cast<std::size_t>(i)].size(); ++r) {
                long sum = 0;
                for (int cvert : p.blocks[static_cast<std::size_t>(j)])
                    sum += m(p.blocks[static_cast<std::size_t>(i)][r], cvert);
                if (r == 0)
                    first = sum;
                else if (sum != first)
                    constant = false;
                total += sum;
            }
            out.q(i, j) = Rational(total, static_cast<long>(p.blocks[static_cast<std::size_t>(i)].size()));
            if (!constant) out.equitable = false;
        }
    }
    return out;
}

Eigen::VectorXd quotient_eigenvalues(const QuotientMatrix& q, const VertexPartition& p) {
    const int k = p.block_count();
    RealMatrix b(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double scale = std::sqrt(static_cast<double>(p.blocks[static_cast<std::size_t>(i)].size()) /
                                     static_cast<double>(p.blocks[static_cast<std::size_t>(j)].size()));
            b(i, j) = static_cast<double>(q.q(i, j)) * scale;
        }
    b = ((b + b.transpose()) * 0.5).eval();
    return jacobi_eigen(b).values;
}

RationalPolynomial char_poly(const RationalMatrix& a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw InvariantViolation("char_poly: matrix must be square");
    // Faddeev-LeVerrier: M_1 = A, c_1 = -tr(M_1), M_{k+1} = A(M_k + c_k I).
    std::vector<Rational> coeff(static_cast<std::size_t>(n) + 1, Rational(0));
    coeff[static_cast<std::size_t>(n)] = 1;
    RationalMatrix mk = a;
    Rational ck(0);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            RationalMatrix next;
            next.setConstant(n, n, Rational(0));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rational s = ck * a(i, j);
                    for (int t = 0; t < n; ++t) s += a(i, t) * mk(t, j);
                    next(i, j) = s;
                }
            mk.swap(next);
        }
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        ck = -tr / k;
        coeff[static_cast<std::size_t>(n - k)] = ck;
    }
    return RationalPolynomial(std::move(coeff));
}

RationalPolynomial char_poly(const IntMatrix& a) {
    RationalMatrix r;
    r.setConstant(a.rows(), a.cols(), Rational(0));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    return char_poly(r);
}

RationalMatrix cancelling_shifts(const IntMatrix& m, const VertexPartition& p) {
    const int n = static_cast<int>(m.rows());
    p.validate(n);
    const int k = p.block_count();
    RationalMatrix shifts;
    shifts.setConstant(k, k, Rational(0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const auto& bi = p.blocks[static_cast<std::size_t>(i)];
            const auto& bj = p.blocks[static_cast<std::size_t>(j)];
            bool have = false;
            int c = 0;
            for (int u : bi)
                for (int v : bj) {
                    if (i == j && u == v) {
                        if (m(u, v) != 0)
                            throw InvariantViolation("cancelling_shifts: nonzero diagonal");
                        continue;
                    }
                    if (!have) {
                        c = m(u, v);
                        have = true;
                    } else if (m(u, v) != c) {
                        throw InvariantViolation("cancelling_shifts: block is not of constant form");
                    }
                }
            shifts(i, j) = have ? Rational(-c) : Rational(0);
        }
    }
    return shifts;
}

namespace {

RealMatrix shifted_matrix(const IntMatrix& m, const VertexPartition& p,
                          const RationalMatrix& shifts) {
    const int k = p.block_count();
    if (shifts.rows() != k || shifts.cols() != k)
        throw InvariantViolation("shift matrix must be k x k");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (shifts(i, j) != shifts(j, i))
                throw InvariantViolation("shift matrix must be symmetric");
    RealMatrix out = m.cast<double>();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const double s = static_cast<double>(shifts(i, j));
            if (s == 0.0) continue;
            for (int u : p.blocks[static_cast<std::size_t>(i)])
                for (int v : p.blocks[static_cast<std::size_t>(j)]) out(u, v) += s;
        }
    return out;
}

}  // namespace

SpectrumReport residual_spectrum(const IntMatrix& m, const VertexPartition& p,
                                 const RationalMatrix& shifts, double tol) {
    if (!quotient(m, p).equitable)
        throw NotEquitable("residual_spectrum: partition is not equitable");
    return spectrum(shifted_matrix(m, p, shifts), tol);
}

bool multiset_close(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (std::abs(a(i) - b(i)) > tol) return false;
    return true;
}

Eigen::VectorXd multiset_subtract(const Eigen::VectorXd& full, const Eigen::VectorXd& part,
                                  double tol) {
    std::vector<double> pool(full.data(), full.data() + full.size());
    std::vector<char> used(pool.size(), 0);
    for (Eigen::Index i = 0; i < part.size(); ++i) {
        int best = -1;
        double best_gap = tol;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (used[j]) continue;
            double gap = std::abs(pool[j] - part(i));
            if (gap <= best_gap) {
                best_gap = gap;
                best = static_cast<int>(j);
            }
        }
        if (best < 0)
            throw MultisetMismatch("quotient eigenvalue missing from the full spectrum");
        used[static_cast<std::size_t>(best)] = 1;
    }
    Eigen::VectorXd rest(full.size() - part.size());
    Eigen::Index k = 0;
    for (std::size_t j = 0; j < pool.size(); ++j)
        if (!used[j]) rest(k++) = pool[j];
    return rest;
}

SpectrumReport spectrum_via_quotient(const IntMatrix& m, const VertexPartition& p,
                                     const RationalMatrix& shifts, double tol) {
    auto q = quotient(m, p);
    if (!q.equitable) throw NotEquitable("spectrum_via_quotient: partition is not equitable");

    Eigen::VectorXd quotient_part = quotient_eigenvalues(q, p);

    // Quotient of the shifted matrix: q'_ij = q_ij + shifts_ij * |V_j|.
    QuotientMatrix shifted_q = q;
    for (int i = 0; i < p.block_count(); ++i)
        for (int j = 0; j < p.block_count(); ++j)
            shifted_q.q(i, j) += shifts(i, j) * static_cast<long>(p.blocks[static_cast<std::size_t>(j)].size());

    Eigen::VectorXd shifted_full = spectrum(shifted_matrix(m, p, shifts), tol).eigenvalues;
    Eigen::VectorXd shifted_quotient = quotient_eigenvalues(shifted_q, p);
    Eigen::VectorXd residual = multiset_subtract(shifted_full, shifted_quotient, std::max(tol, 1e-7));

    Eigen::VectorXd recon(shifted_full.size());
    recon << quotient_part, residual;
    std::sort(recon.data(), recon.data() + recon.size(), std::greater<double>());

    Eigen::VectorXd direct = spectrum(m.cast<double>(), tol).eigenvalues;
    if (!multiset_close(recon, direct, tol))
        throw MultisetMismatch("reconstructed spectrum disagrees with the direct spectrum");
    return make_spectrum_report(std::move(recon), tol);
}

}  // namespace sgt
