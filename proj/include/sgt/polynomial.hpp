#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgt/errors.hpp"

namespace sgt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient vector and degree -1.
template <class Coeff>
class PolynomialT {
public:
    PolynomialT() = default;
    explicit PolynomialT(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { normalize(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Coeff>& coefficients() const { return c_; }
    const Coeff& operator[](std::size_t k) const { return c_[k]; }
    Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }

    /// Exact Horner evaluation.
    template <class X>
    X eval(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
        return acc;
    }

    PolynomialT derivative() const {
        std::vector<Coeff> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Coeff(static_cast<long>(k)));
        return PolynomialT(std::move(d));
    }

    PolynomialT operator*(const PolynomialT& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Coeff> r(c_.size() + o.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return PolynomialT(std::move(r));
    }

    PolynomialT operator+(const PolynomialT& o) const {
        std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), Coeff(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return PolynomialT(std::move(r));
    }

    PolynomialT operator-() const {
        auto r = c_;
        for (auto& x : r) x = -x;
        return PolynomialT(std::move(r));
    }

    PolynomialT operator-(const PolynomialT& o) const { return *this + (-o); }

    friend bool operator==(const PolynomialT&, const PolynomialT&) = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            if (c_[k] == 0) continue;
            if (!s.empty()) s += (c_[k] > 0 ? " + " : " - ");
            else if (c_[k] < 0) s += "-";
            Coeff a = c_[k] < 0 ? Coeff(-c_[k]) : c_[k];
            bool unit = (a == 1) && k > 0;
            if (!unit) s += a.str();
            if (k > 0) s += unit ? "x" : "*x";
            if (k > 1) s += "^" + std::to_string(k);
        }
        return s;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Coeff> c_;
};

using Polynomial = PolynomialT<BigInt>;
using RationalPolynomial = PolynomialT<Rational>;

/// Exact integer evaluation (arbitrary precision).
inline BigInt poly_eval_int(const Polynomial& p, const BigInt& x) { return p.eval(x); }

/// Converts a rational polynomial known to have integer coefficients.
Polynomial to_integer_polynomial(const RationalPolynomial& p);

/// True iff p(x0) > 0 and every derivative of p is >= 0 at x0; by Taylor
/// expansion this certifies that p has no real root at or above x0.
bool positive_with_nonnegative_derivatives(const Polynomial& p, const Rational& x0);

/// Largest real root of p located in [lo, hi], by bisection, after certifying
/// that p has no root above hi (derivative sign chain at hi, with the Cauchy
/// bound as fallback). Throws BracketError when no root is certified inside.
double largest_real_root(const Polynomial& p, double lo, double hi, double tol = 1e-10);

}  // namespace sgt
