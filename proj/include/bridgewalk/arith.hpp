#pragma once

// Exact arithmetic helpers shared across the library.  All counting is done
// in arbitrary precision (GMP); rationals are used wherever a bound or a
// bracket has to be certified rather than estimated.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bridgewalk {

using BigInt = mpz_class;
using Rational = mpq_class;

// q^e for e >= 0.
Rational pow_rational(const Rational& q, unsigned long e);

// Largest decimal number with `sig_digits` significant digits that is <= q.
// Requires q > 0.  Returned as an exact rational plus its decimal rendering.
struct DirectedDecimal {
    Rational value;
    std::string text;
};
DirectedDecimal decimal_round_down(const Rational& q, int sig_digits);
// Smallest decimal number with `sig_digits` significant digits that is >= q.
DirectedDecimal decimal_round_up(const Rational& q, int sig_digits);

// Rendering used by the JSON layer: exact rational as "num/den".
std::string rational_string(const Rational& q);

// Approximate decimal rendering of a rational (round-to-nearest, for
// human-facing report fields only; never used in certified comparisons).
std::string rational_approx_string(const Rational& q, int digits);

// 64-bit mixing for vertex hashing.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
    return mix64(seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

}  // namespace bridgewalk
