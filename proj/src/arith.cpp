#include "bridgewalk/arith.hpp"

#include <cassert>
#include <stdexcept>

namespace bridgewalk {

Rational pow_rational(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    // num/den coprime implies num^e/den^e coprime, no canonicalization needed
    return r;
}

namespace {

BigInt pow10z(unsigned long k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

// Decimal exponent e with 10^e <= q < 10^(e+1).  Requires q > 0.
long decimal_exponent(const Rational& q) {
    assert(sgn(q) > 0);
    long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 10));
    auto cmp_pow10 = [&](long k) {
        // compare q against 10^k exactly
        Rational p = (k >= 0) ? Rational(pow10z(k)) : Rational(1, pow10z(-k));
        return cmp(q, p);
    };
    while (cmp_pow10(e) < 0) --e;
    while (cmp_pow10(e + 1) >= 0) ++e;
    return e;
}

// floor / ceil of q * 10^k for possibly negative k.
BigInt scaled_floor(const Rational& q, long k) {
    BigInt num = q.get_num(), den = q.get_den(), r;
    if (k >= 0)
        num *= pow10z(k);
    else
        den *= pow10z(-k);
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

BigInt scaled_ceil(const Rational& q, long k) {
    BigInt num = q.get_num(), den = q.get_den(), r;
    if (k >= 0)
        num *= pow10z(k);
    else
        den *= pow10z(-k);
    mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

std::string render(const BigInt& mantissa, long e, int sig) {
    std::string digits = mantissa.get_str();
    assert(static_cast<int>(digits.size()) == sig);
    std::string out;
    if (e >= 0) {
        long ipart = e + 1;
        if (ipart >= sig) {
            out = digits + std::string(ipart - sig, '0');
        } else {
            out = digits.substr(0, ipart) + "." + digits.substr(ipart);
        }
    } else {
        out = "0." + std::string(-e - 1, '0') + digits;
    }
    return out;
}

DirectedDecimal directed(const Rational& q, int sig, bool up) {
    if (sgn(q) <= 0) throw std::invalid_argument("directed decimal rounding requires q > 0");
    if (sig < 1) throw std::invalid_argument("need at least one significant digit");
    long e = decimal_exponent(q);
    long k = sig - 1 - e;
    BigInt mant = up ? scaled_ceil(q, k) : scaled_floor(q, k);
    BigInt hi = pow10z(sig);
    if (mant == hi) {  // rounding up crossed a power of ten
        mant /= 10;
        ++e;
        k = sig - 1 - e;
    }
    Rational value = (k >= 0) ? Rational(mant, pow10z(k)) : Rational(mant * pow10z(-k));
    value.canonicalize();
    return DirectedDecimal{value, render(mant, e, sig)};
}

}  // namespace

DirectedDecimal decimal_round_down(const Rational& q, int sig_digits) {
    return directed(q, sig_digits, /*up=*/false);
}

DirectedDecimal decimal_round_up(const Rational& q, int sig_digits) {
    return directed(q, sig_digits, /*up=*/true);
}

std::string rational_string(const Rational& q) { return q.get_str(); }

std::string rational_approx_string(const Rational& q, int digits) {
    int s = sgn(q);
    if (s == 0) return "0";
    if (s < 0) return "-" + rational_approx_string(-q, digits);
    long e = decimal_exponent(q);
    long k = digits - 1 - e;
    // round half up: floor(q*10^k + 1/2)
    Rational scaled = q;
    if (k >= 0)
        scaled *= Rational(pow10z(k));
    else
        scaled /= Rational(pow10z(-k));
    scaled += Rational(1, 2);
    BigInt mant = scaled_floor(scaled, 0);
    if (mant == pow10z(digits)) {
        mant /= 10;
        ++e;
    }
    return render(mant, e, digits);
}

}  // namespace bridgewalk
