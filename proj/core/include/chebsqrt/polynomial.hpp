#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "chebsqrt/rational.hpp"

namespace chebsqrt {

/// Dense univariate polynomial over the rationals. coeffs()[i] multiplies z^i.
/// The zero polynomial has no stored coefficients; otherwise the last stored
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * z^k
  static Polynomial monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of z^i, zero beyond the degree.
  Rational operator[](std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& z) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// The polynomial z.
Polynomial poly_z();

/// Euclidean division; throws Error{ZeroDenominator} for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Horner evaluation for any scalar type that accepts a converted coefficient.
template <class Scalar>
Scalar horner(std::span<const Scalar> coeffs, const Scalar& z, const Scalar& zero) {
  Scalar acc = zero;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

}  // namespace chebsqrt
