#pragma once

// Exact generating functions for bridges on the grandparent graph, counted
// by length and refined by span.  B_a(x) is the polynomial whose x^n
// coefficient is the number of span-a bridges of length n from a fixed
// vertex; the reversed family counts the height-reversed bridges.  A third
// order linear recursion in the span expresses B_a via B_{a-1}, B_{a-2},
// B_{a-3} with coefficient polynomials built from geometric sums in 2x.
// The growth rate of b_n is the reciprocal of the smallest positive root of
// an explicit quartic, obtained from the a -> infinity limit of the
// recursion's coefficients.

#include "bridgewalk/polynomial.hpp"

#include <vector>

namespace bridgewalk {

enum class Direction { Forward, Reversed };

inline const char* direction_name(Direction d) {
    return d == Direction::Forward ? "forward" : "reversed";
}

// Generating function of the stair walks used inside the recursion:
// sum_{m=2}^{a} (2x)^m.  Requires a >= 2.
Polynomial u_walk_gf(int a);

// B_a(x) for one span a >= 0.
Polynomial bridge_gf(int a, Direction dir);

// B_0..B_a as one table (the recursion is computed once).
std::vector<Polynomial> bridge_gf_table(int a_max, Direction dir);

// Coefficient polynomials of the span recursion
// B_a = f_a * B_{a-1} + g * B_{a-2} + h_a * B_{a-3} (a >= 3).
struct SpanRecursionCoeffs {
    Polynomial f, g, h;
};
SpanRecursionCoeffs span_recursion_coeffs(int a, Direction dir);

// 1 - (f_inf + g + h_inf): the singularity equation of the total bridge
// generating function.  Its numerator's smallest positive root is the
// reciprocal of the bridge growth rate.
RationalFunction threshold_rational(Direction dir);

// The numerator above in primitive integer form (a quartic with constant
// term 1 for both directions).
Polynomial threshold_quartic(Direction dir);

}  // namespace bridgewalk
