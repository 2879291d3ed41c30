#include "bridgewalk/polynomial.hpp"

#include <cassert>
#include <stdexcept>

namespace bridgewalk {

Polynomial Polynomial::monomial(const Rational& c, int k) {
    if (c == 0) return Polynomial();
    std::vector<Rational> v(std::size_t(k) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(long(i)) * c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> out = p.c_;
    for (auto& q : out) q *= s;
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Rational> q;
    int dd = divisor.degree();
    Rational lead = divisor.c_.back();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational factor = rem.c_.back() / lead;
        if (int(q.size()) < shift + 1) q.resize(std::size_t(shift) + 1);
        q[std::size_t(shift)] += factor;
        rem -= Polynomial::monomial(factor, shift) * divisor;
    }
    return {Polynomial(std::move(q)), std::move(rem)};
}

Polynomial Polynomial::primitive_integer_form() const {
    if (is_zero()) return Polynomial();
    BigInt den_lcm = 1;
    for (const auto& q : c_) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        den_lcm = den_lcm / g * q.get_den();
    }
    std::vector<Rational> scaled = c_;
    for (auto& q : scaled) q *= Rational(den_lcm);
    BigInt content = 0;
    for (const auto& q : scaled) {
        assert(q.get_den() == 1);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), q.get_num_mpz_t());
    }
    for (auto& q : scaled) q /= Rational(content);
    Polynomial out(std::move(scaled));
    for (const auto& q : out.c_)
        if (q != 0) {
            if (q < 0) out = -out;
            break;
        }
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational q = c_[i];
        if (s.empty()) {
            if (q < 0) s += "-";
        } else {
            s += (q < 0) ? " - " : " + ";
        }
        Rational aq = abs(q);
        bool unit = aq == 1;
        if (i == 0 || !unit) s += aq.get_str();
        if (i > 0) {
            if (!unit) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational lead = a.coeff(a.degree());
    return (Rational(1) / lead) * a;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.coeff(den_.degree());
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

}  // namespace bridgewalk
