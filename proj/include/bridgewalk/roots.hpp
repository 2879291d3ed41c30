#pragma once

// Certified real-root isolation with exact rational arithmetic.  An
// interval certificate consists of a sign change across the bracket plus a
// Descartes count showing the bracket holds exactly one root and nothing
// lies below it.

#include "bridgewalk/gp_series.hpp"

namespace bridgewalk {

struct RootInterval {
    Rational lo, hi;
    int sign_lo = 0, sign_hi = 0;  // signs of the polynomial at the ends

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
};

struct NoRootFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Upper bound (exact parity) for the number of roots of p in the open
// interval (a, b), via the Moebius transform and Descartes' rule.
int sign_variations_in(const Polynomial& p, const Rational& a, const Rational& b);

// The smallest root of p in (0, search_hi], bracketed to the given width.
// The returned interval [lo, hi] satisfies p(lo) * p(hi) < 0, contains
// exactly one root of p, and no root of p lies in (0, lo].  Requires
// p(0) != 0.  Throws NoRootFound if no root is detected, or if a root
// cluster prevents certification.
RootInterval smallest_positive_root(const Polynomial& p, const Rational& width,
                                    const Rational& search_hi);

// Exact bracket for a bridge growth rate of the grandparent graph: the
// reciprocal of the smallest positive root of the direction's threshold
// quartic, tightened until the value interval is narrower than
// 2^-precision_bits.
struct ExactBridgeConstant {
    Direction dir;
    Polynomial quartic;
    RootInterval root;   // smallest positive root of the quartic
    RootInterval value;  // reciprocal bracket for the growth constant
};
ExactBridgeConstant bridge_constant_exact(Direction dir, int precision_bits);

}  // namespace bridgewalk
