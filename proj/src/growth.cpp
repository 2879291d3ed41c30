#include "bridgewalk/growth.hpp"

#include <stdexcept>

namespace bridgewalk {

namespace {

BigInt pow10z(int e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, unsigned(e));
    return p;
}

// Number of fractional digits so the rendered root keeps `digits`
// significant digits: the root's integer part has floor(log10) + 1 of them.
int fraction_digits(const BigInt& value, int n, int digits) {
    BigInt r;
    mpz_root(r.get_mpz_t(), value.get_mpz_t(), unsigned(n));
    int int_digits = int(mpz_sizeinbase(r.get_mpz_t(), 10));
    return std::max(0, digits - int_digits);
}

DirectedDecimal render_scaled(const BigInt& mantissa, int frac) {
    std::string s = mantissa.get_str();
    if (int(s.size()) <= frac) s.insert(0, std::size_t(frac + 1 - int(s.size())), '0');
    DirectedDecimal out;
    out.value = Rational(mantissa, pow10z(frac));
    out.value.canonicalize();
    out.text = s.substr(0, s.size() - std::size_t(frac));
    if (frac > 0) out.text += "." + s.substr(s.size() - std::size_t(frac));
    return out;
}

}  // namespace

DirectedDecimal nth_root_lower(const BigInt& value, int n, int digits) {
    if (value < 1 || n < 1 || digits < 1)
        throw std::invalid_argument("nth_root_lower: need value >= 1, n >= 1, digits >= 1");
    int frac = fraction_digits(value, n, digits);
    BigInt scaled = value * pow10z(frac * n);
    BigInt m;
    mpz_root(m.get_mpz_t(), scaled.get_mpz_t(), unsigned(n));  // floor root
    return render_scaled(m, frac);
}

DirectedDecimal nth_root_upper(const BigInt& value, int n, int digits) {
    if (value < 1 || n < 1 || digits < 1)
        throw std::invalid_argument("nth_root_upper: need value >= 1, n >= 1, digits >= 1");
    int frac = fraction_digits(value, n, digits);
    BigInt scaled = value * pow10z(frac * n);
    BigInt m;
    int exact = mpz_root(m.get_mpz_t(), scaled.get_mpz_t(), unsigned(n));
    if (!exact) m += 1;
    return render_scaled(m, frac);
}

bool nth_root_leq(const BigInt& x, int n, const BigInt& y, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("nth_root_leq: need n, m >= 1");
    BigInt lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), x.get_mpz_t(), unsigned(m));
    mpz_pow_ui(rhs.get_mpz_t(), y.get_mpz_t(), unsigned(n));
    return lhs <= rhs;
}

}  // namespace bridgewalk
