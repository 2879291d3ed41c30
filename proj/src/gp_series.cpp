#include "bridgewalk/gp_series.hpp"

#include <stdexcept>

namespace bridgewalk {

namespace {

const Polynomial kX({Rational(0), Rational(1)});

// sum_{i=0}^{k-1} (2x)^i
Polynomial geometric_2x(int k) {
    std::vector<Rational> c(std::size_t(std::max(k, 0)));
    BigInt pw = 1;
    for (int i = 0; i < k; ++i) {
        c[std::size_t(i)] = Rational(pw);
        pw *= 2;
    }
    return Polynomial(std::move(c));
}

Polynomial xpow(int k, long scale = 1) { return Polynomial::monomial(Rational(scale), k); }

}  // namespace

Polynomial u_walk_gf(int a) {
    if (a < 2) throw std::invalid_argument("u_walk_gf needs a >= 2");
    // sum_{m=2}^{a} (2x)^m = 4x^2 * sum_{i=0}^{a-2} (2x)^i
    return xpow(2, 4) * geometric_2x(a - 1);
}

SpanRecursionCoeffs span_recursion_coeffs(int a, Direction dir) {
    if (a < 3) throw std::invalid_argument("span recursion starts at a = 3");
    SpanRecursionCoeffs r;
    if (dir == Direction::Forward) {
        r.f = xpow(1, 2) + xpow(2, 2) * geometric_2x(a - 1);
        r.g = xpow(1, 4);
        r.h = xpow(3, 8) + xpow(4, 8) * geometric_2x(a - 2);
    } else {
        r.f = xpow(1, 1) + xpow(2, 1) * geometric_2x(a - 2);
        r.g = xpow(1, 1);
        r.h = xpow(3, 1) + xpow(4, 1) * geometric_2x(a - 3);
    }
    return r;
}

std::vector<Polynomial> bridge_gf_table(int a_max, Direction dir) {
    if (a_max < 0) throw std::invalid_argument("a_max must be >= 0");
    std::vector<Polynomial> b;
    b.reserve(std::size_t(a_max) + 1);
    if (dir == Direction::Forward) {
        b.push_back(Polynomial({Rational(1)}));
        if (a_max >= 1) b.push_back(xpow(1, 2));
        if (a_max >= 2) b.push_back(xpow(1, 4) + xpow(2, 4) + xpow(3, 4));
    } else {
        b.push_back(Polynomial({Rational(1)}));
        if (a_max >= 1) b.push_back(xpow(1, 1));
        if (a_max >= 2) b.push_back(xpow(1, 1) + xpow(2, 1));
    }
    for (int a = 3; a <= a_max; ++a) {
        SpanRecursionCoeffs r = span_recursion_coeffs(a, dir);
        b.push_back(r.f * b[std::size_t(a - 1)] + r.g * b[std::size_t(a - 2)] +
                    r.h * b[std::size_t(a - 3)]);
    }
    return b;
}

Polynomial bridge_gf(int a, Direction dir) { return bridge_gf_table(a, dir).back(); }

RationalFunction threshold_rational(Direction dir) {
    // limits of the recursion coefficients: geometric_2x -> 1/(1-2x)
    RationalFunction inv_geom(Polynomial({Rational(1)}),
                              Polynomial({Rational(1), Rational(-2)}));
    auto rf = [](const Polynomial& p) { return RationalFunction::from_poly(p); };
    RationalFunction f_inf, g, h_inf;
    if (dir == Direction::Forward) {
        f_inf = rf(xpow(1, 2)) + rf(xpow(2, 2)) * inv_geom;
        g = rf(xpow(1, 4));
        h_inf = rf(xpow(3, 8)) + rf(xpow(4, 8)) * inv_geom;
    } else {
        f_inf = rf(xpow(1, 1)) + rf(xpow(2, 1)) * inv_geom;
        g = rf(xpow(1, 1));
        h_inf = rf(xpow(3, 1)) + rf(xpow(4, 1)) * inv_geom;
    }
    return rf(Polynomial({Rational(1)})) - (f_inf + g + h_inf);
}

Polynomial threshold_quartic(Direction dir) {
    Polynomial q = threshold_rational(dir).num().primitive_integer_form();
    if (q.degree() != 4 || q.coeff(0) != 1)
        throw std::logic_error("threshold numerator is not the expected quartic");
    return q;
}

}  // namespace bridgewalk
