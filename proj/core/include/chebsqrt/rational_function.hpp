#pragma once

#include "chebsqrt/polynomial.hpp"

namespace chebsqrt {

/// Gaussian rational re + i*im, for exact evaluation off the real axis.
struct ComplexRational {
  Rational re;
  Rational im;

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexRational& operator+=(const ComplexRational& b) { return *this = *this + b; }
  ComplexRational& operator*=(const ComplexRational& b) { return *this = *this * b; }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);

/// num/den in canonical form: coprime, den monic. Two values compare equal
/// exactly when they represent the same function.
class RationalFunction {
 public:
  /// The constant 1.
  RationalFunction();
  /// Normalizes num/den. Throws Error{ZeroDenominator} if den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(const Rational& c);
  static RationalFunction polynomial(Polynomial p);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  /// Exact value; throws Error{PoleAtPoint} if den(x) == 0.
  Rational operator()(const Rational& x) const;
  ComplexRational operator()(const ComplexRational& z) const;

  RationalFunction pow(unsigned e) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws Error{DegenerateStep} when b is identically zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  struct Normalized {};
  RationalFunction(Polynomial num, Polynomial den, Normalized);

  Polynomial num_;
  Polynomial den_;
};

/// Free-function spelling of the normalizing constructor.
RationalFunction ratfun_normalize(Polynomial num, Polynomial den);
Rational ratfun_eval(const RationalFunction& f, const Rational& x);

}  // namespace chebsqrt
