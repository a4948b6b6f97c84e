#include "chebsqrt/rational_function.hpp"

#include "chebsqrt/errors.hpp"

namespace chebsqrt {

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
  Rational norm = b.re * b.re + b.im * b.im;
  if (norm == 0) throw Error(Errc::ZeroDenominator, "complex division by zero");
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

RationalFunction::RationalFunction() : num_(Polynomial::constant(1)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  const Rational inv_lead = 1 / den.leading();
  num_ = std::move(num) * inv_lead;
  den_ = std::move(den) * inv_lead;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Normalized)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(Polynomial::constant(c), Polynomial::constant(1), Normalized{});
}

RationalFunction RationalFunction::polynomial(Polynomial p) {
  return RationalFunction(std::move(p), Polynomial::constant(1), Normalized{});
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw Error(Errc::PoleAtPoint, "denominator vanishes at z = " + to_string(x));
  return num_(x) / d;
}

ComplexRational RationalFunction::operator()(const ComplexRational& z) const {
  auto eval = [&z](const Polynomial& p) {
    ComplexRational acc{0, 0};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
      acc *= z;
      acc.re += *it;
    }
    return acc;
  };
  ComplexRational d = eval(den_);
  if (d.re == 0 && d.im == 0)
    throw Error(Errc::PoleAtPoint, "denominator vanishes at z = " + to_string(z.re) + " + i*" + to_string(z.im));
  return eval(num_) / d;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  // Powers of coprime polynomials stay coprime.
  return RationalFunction(num_.pow(e), den_.pow(e), Normalized{});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(Errc::DegenerateStep, "division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction ratfun_normalize(Polynomial num, Polynomial den) {
  return RationalFunction(std::move(num), std::move(den));
}

Rational ratfun_eval(const RationalFunction& f, const Rational& x) { return f(x); }

}  // namespace chebsqrt
