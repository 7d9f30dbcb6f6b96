#include "sgt/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace sgt {

Polynomial to_integer_polynomial(const RationalPolynomial& p) {
    std::vector<BigInt> c;
    c.reserve(p.coefficients().size());
    for (const auto& q : p.coefficients()) {
        if (boost::multiprecision::denominator(q) != 1)
            throw InvariantViolation("polynomial coefficient is not an integer: " + q.str());
        c.push_back(boost::multiprecision::numerator(q));
    }
    return Polynomial(std::move(c));
}

bool positive_with_nonnegative_derivatives(const Polynomial& p, const Rational& x0) {
    if (p.is_zero()) return false;
    Polynomial q = p.leading() > 0 ? p : -p;
    if (q.eval(x0) <= 0) return false;
    for (Polynomial d = q.derivative(); !d.is_zero(); d = d.derivative())
        if (d.eval(x0) < 0) return false;
    return true;
}

namespace {

RationalPolynomial to_rational(const Polynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coefficients().size());
    for (const auto& a : p.coefficients()) c.emplace_back(a);
    return RationalPolynomial(std::move(c));
}

// Remainder of a by b over the rationals.
RationalPolynomial poly_rem(RationalPolynomial a, const RationalPolynomial& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational f = a.leading() / b.leading();
        int shift = a.degree() - b.degree();
        std::vector<Rational> sub(static_cast<std::size_t>(shift) + b.coefficients().size(),
                                  Rational(0));
        for (std::size_t i = 0; i < b.coefficients().size(); ++i)
            sub[i + shift] = b.coefficients()[i] * f;
        a = a - RationalPolynomial(std::move(sub));
    }
    return a;
}

std::vector<RationalPolynomial> sturm_sequence(const Polynomial& p) {
    std::vector<RationalPolynomial> chain;
    chain.push_back(to_rational(p));
    chain.push_back(to_rational(p.derivative()));
    while (!chain.back().is_zero()) {
        auto r = poly_rem(chain[chain.size() - 2], chain.back());
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<RationalPolynomial>& chain, const Rational& x) {
    int variations = 0, last = 0;
    for (const auto& q : chain) {
        Rational v = q.eval(x);
        int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// Number of distinct real roots of p in (a, b]; requires p(a) != 0, p(b) != 0.
int roots_in(const std::vector<RationalPolynomial>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational cauchy_root_bound(const Polynomial& p) {
    using boost::multiprecision::abs;
    BigInt lead = abs(p.leading());
    Rational best(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational r(abs(p[static_cast<std::size_t>(k)]), lead);
        if (r > best) best = r;
    }
    return best + 1;
}

}  // namespace

double largest_real_root(const Polynomial& p, double lo, double hi, double tol) {
    if (p.degree() < 1) throw BracketError("constant polynomial has no root");
    if (!(lo < hi)) throw BracketError("empty bracket");
    Rational rlo(lo), rhi(hi);
    if (p.eval(rhi) == 0) throw BracketError("bracket_hi is a root; widen the bracket");

    auto chain = sturm_sequence(p);
    // Certify that no root lies above hi: derivative sign chain first, then
    // the Cauchy bound, then an exact Sturm count up to the Cauchy bound.
    if (!positive_with_nonnegative_derivatives(p, rhi)) {
        Rational bound = cauchy_root_bound(p);
        if (rhi < bound && roots_in(chain, rhi, bound) != 0)
            throw BracketError("a root lies above bracket_hi");
    }
    if (p.eval(rlo) == 0)
        throw BracketError("bracket_lo is a root; shrink the bracket");
    if (roots_in(chain, rlo, rhi) == 0)
        throw BracketError("no root certified in bracket");

    // Bisect keeping the largest root inside (a, b].
    Rational a = rlo, b = rhi;
    double da = lo, db = hi;
    while (db - da > tol) {
        double dm = 0.5 * (da + db);
        Rational m(dm);
        if (p.eval(m) == 0) {
            if (roots_in(chain, m, b) == 0) return dm;
            a = m;
            da = dm;
            continue;
        }
        if (roots_in(chain, m, b) >= 1) {
            a = m;
            da = dm;
        } else {
            b = m;
            db = dm;
        }
    }
    return 0.5 * (da + db);
}

}  // namespace sgt
