#include "chebsqrt/complex.hpp"

#include <bit>

#include "chebsqrt/errors.hpp"

namespace chebsqrt {

Complex& Complex::operator+=(const Complex& b) {
  re += b.re;
  im += b.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& b) {
  re -= b.re;
  im -= b.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& b) {
  BigFloat r = re * b.re - im * b.im;
  BigFloat i = re * b.im + im * b.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator+=(const BigFloat& b) {
  re += b;
  return *this;
}

Complex operator/(const Complex& a, const Complex& b) {
  BigFloat norm = b.re * b.re + b.im * b.im;
  if (norm.is_zero()) throw Error(Errc::ZeroDenominator, "complex division by zero");
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

BigFloat abs(const Complex& z) { return hypot(z.re, z.im); }

Complex sqrt(const Complex& z) {
  const unsigned prec = z.precision();
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) return {sqrt(z.re), BigFloat(prec)};
    return {BigFloat(prec), sqrt(-z.re)};
  }
  // t = sqrt((|z| + |re|) / 2) avoids cancellation.
  BigFloat t = sqrt((abs(z) + abs(z.re)) / BigFloat(2L, prec));
  BigFloat half_im_over_t = z.im / (BigFloat(2L, prec) * t);
  if (z.re.sign() >= 0) return {t, half_im_over_t};
  BigFloat im = z.im.sign() < 0 ? -t : t;
  return {abs(half_im_over_t), im};
}

Complex pow(const Complex& z, unsigned long e) {
  Complex result(BigFloat(1L, z.precision()), BigFloat(z.precision()));
  Complex base = z;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Complex polar_point(const BigFloat& radius, long j, long n) {
  const unsigned prec = radius.precision();
  return {radius * cos_pi_fraction(2 * j, n, prec), radius * sin_pi_fraction(2 * j, n, prec)};
}

Complex horner(std::span<const BigFloat> coeffs, const Complex& z) {
  Complex acc(z.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Complex FloatRationalFunction::operator()(const Complex& z) const {
  Complex d = horner(den, z);
  if (d.re.is_zero() && d.im.is_zero()) throw Error(Errc::PoleAtPoint, "denominator vanishes");
  return horner(num, z) / d;
}

BigFloat FloatRationalFunction::operator()(const BigFloat& x) const {
  BigFloat d = horner<BigFloat>(den, x, BigFloat(x.precision()));
  if (d.is_zero()) throw Error(Errc::PoleAtPoint, "denominator vanishes");
  return horner<BigFloat>(num, x, BigFloat(x.precision())) / d;
}

FloatRationalFunction to_float(const RationalFunction& f, unsigned precision) {
  const Rational scale = f.den()[0] != 0 ? Rational(1 / f.den()[0]) : Rational(1);
  FloatRationalFunction out;
  for (const auto& c : f.num().coeffs()) out.num.emplace_back(Rational(c * scale), precision);
  for (const auto& c : f.den().coeffs()) out.den.emplace_back(Rational(c * scale), precision);
  return out;
}

unsigned horner_guard_bits(const RationalFunction& f) {
  const Rational scale = f.den()[0] != 0 ? Rational(1 / abs(f.den()[0])) : Rational(1);
  Rational norm = 0;
  for (const auto& c : f.num().coeffs()) norm += abs(c) * scale;
  for (const auto& c : f.den().coeffs()) norm += abs(c) * scale;
  const Integer ceil_norm = norm.get_num() / norm.get_den() + 1;
  const std::size_t terms = f.num().coeffs().size() + f.den().coeffs().size();
  return 16 + static_cast<unsigned>(mpz_sizeinbase(ceil_norm.get_mpz_t(), 2)) +
         static_cast<unsigned>(std::bit_width(terms));
}

}  // namespace chebsqrt
