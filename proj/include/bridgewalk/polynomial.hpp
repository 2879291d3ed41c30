#pragma once

// Dense polynomials and rational functions over the rationals, exact
// throughout.  Just enough algebra for the generating-function work: ring
// operations, evaluation, Euclidean gcd, and a normal form for quotients.

#include "bridgewalk/arith.hpp"

#include <initializer_list>
#include <vector>

namespace bridgewalk {

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Rational& q) { return Polynomial({q}); }
    // c * x^k
    static Polynomial monomial(const Rational& c, int k);

    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const {
        return (i >= 0 && i < int(c_.size())) ? c_[std::size_t(i)] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Quotient and remainder of division by a nonzero polynomial.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    // This polynomial scaled by a positive rational so its coefficients are
    // coprime integers; the sign is fixed to make the lowest nonzero
    // coefficient positive.
    Polynomial primitive_integer_form() const;

    // Human-readable rendering in the variable x.
    std::string to_string() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Monic greatest common divisor.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// num/den kept in normal form: gcd cancelled, denominator monic.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_({Rational(1)}) {}
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction from_poly(Polynomial p) {
        return RationalFunction(std::move(p), Polynomial({Rational(1)}));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    Rational eval(const Rational& x) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  private:
    Polynomial num_, den_;
};

}  // namespace bridgewalk
