#pragma once

#include <span>
#include <vector>

#include "chebsqrt/bigfloat.hpp"
#include "chebsqrt/rational_function.hpp"

namespace chebsqrt {

/// Complex number with BigFloat parts. std::complex is unspecified for
/// non-arithmetic value types, hence a small dedicated type.
struct Complex {
  BigFloat re;
  BigFloat im;

  explicit Complex(unsigned precision = kDefaultPrecision) : re(precision), im(precision) {}
  Complex(BigFloat re_, BigFloat im_) : re(std::move(re_)), im(std::move(im_)) {}
  Complex(const ComplexRational& z, unsigned precision) : re(z.re, precision), im(z.im, precision) {}

  unsigned precision() const noexcept { return std::max(re.precision(), im.precision()); }

  Complex& operator+=(const Complex& b);
  Complex& operator-=(const Complex& b);
  Complex& operator*=(const Complex& b);
  Complex& operator+=(const BigFloat& b);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const BigFloat& s, const Complex& a) { return {s * a.re, s * a.im}; }
};

BigFloat abs(const Complex& z);
/// Principal branch: Re(result) >= 0, cut along the negative real axis.
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, unsigned long e);
/// Polar point r * (cos(2*pi*j/n) + i sin(2*pi*j/n)).
Complex polar_point(const BigFloat& radius, long j, long n);

/// Horner evaluation of a real-coefficient polynomial at a complex point.
Complex horner(std::span<const BigFloat> coeffs, const Complex& z);

/// A RationalFunction rounded to BigFloat coefficients, scaled so that the
/// denominator's constant term is 1 when it is nonzero.
struct FloatRationalFunction {
  std::vector<BigFloat> num;
  std::vector<BigFloat> den;

  Complex operator()(const Complex& z) const;
  BigFloat operator()(const BigFloat& x) const;
};

FloatRationalFunction to_float(const RationalFunction& f, unsigned precision);

/// Extra bits that keep coefficient-form Horner evaluation of f on the closed
/// unit disk accurate to the working precision: 16 plus the bit size of the
/// coefficient 1-norms after scaling to den(0) = 1.
unsigned horner_guard_bits(const RationalFunction& f);

}  // namespace chebsqrt
