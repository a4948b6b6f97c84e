#include "chebsqrt/iterates.hpp"

#include "chebsqrt/errors.hpp"

namespace chebsqrt {

namespace {

void require_root_order(int p) {
  if (p < 2) throw Error(Errc::BadRootOrder, "root order p must be >= 2, got " + std::to_string(p));
}

// 1 - z
const Polynomial& one_minus_z() {
  static const Polynomial p{Rational(1), Rational(-1)};
  return p;
}

}  // namespace

IterationScheme IterationScheme::newton(int p) {
  require_root_order(p);
  return {Kind::Newton, p};
}

IterationScheme IterationScheme::halley(int p) {
  require_root_order(p);
  return {Kind::Halley, p};
}

std::string IterationScheme::name() const {
  switch (kind) {
    case Kind::VStep: return "v";
    case Kind::Newton: return "newton";
    case Kind::Halley: return "halley";
  }
  return "?";
}

IterationScheme parse_scheme(const std::string& name, int p) {
  if (name == "v") return IterationScheme::v_step();
  if (name == "newton") return IterationScheme::newton(p);
  if (name == "halley") return IterationScheme::halley(p);
  throw Error(Errc::ParseError, "unknown scheme '" + name + "' (expected v, newton or halley)");
}

// With f = a/b in lowest terms each step is assembled from polynomials directly,
// so only one gcd is taken per step.

RationalFunction v_step(const RationalFunction& f) {
  const Polynomial& a = f.num();
  const Polynomial& b = f.den();
  Polynomial den = b + a;
  if (den.is_zero()) throw Error(Errc::DegenerateStep, "1 + V vanishes identically");
  return RationalFunction(one_minus_z() * b + a, std::move(den));
}

RationalFunction newton_step(const RationalFunction& f, int p) {
  require_root_order(p);
  if (f.is_zero()) throw Error(Errc::DegenerateStep, "Newton step from the zero function");
  const Polynomial& a = f.num();
  const Polynomial& b = f.den();
  const unsigned pm1 = static_cast<unsigned>(p - 1);
  // ((p-1) a^p + (1-z) b^p) / (p a^(p-1) b)
  Polynomial a_pm1 = a.pow(pm1);
  Polynomial num = Rational(p - 1) * (a_pm1 * a) + one_minus_z() * b.pow(static_cast<unsigned>(p));
  Polynomial den = Rational(p) * (a_pm1 * b);
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction halley_step(const RationalFunction& f, int p) {
  require_root_order(p);
  const Polynomial& a = f.num();
  const Polynomial& b = f.den();
  const unsigned up = static_cast<unsigned>(p);
  // a ((p-1) a^p + (p+1)(1-z) b^p) / (b ((p+1) a^p + (p-1)(1-z) b^p))
  Polynomial ap = a.pow(up);
  Polynomial bp_omz = one_minus_z() * b.pow(up);
  Polynomial den_factor = Rational(p + 1) * ap + Rational(p - 1) * bp_omz;
  if (den_factor.is_zero()) throw Error(Errc::DegenerateStep, "Halley denominator vanishes identically");
  Polynomial num = a * (Rational(p - 1) * ap + Rational(p + 1) * bp_omz);
  return RationalFunction(std::move(num), b * den_factor);
}

RationalFunction iterate(const IterationScheme& scheme, unsigned k, const IterationCaps& caps) {
  RationalFunction f;  // the constant 1
  switch (scheme.kind) {
    case IterationScheme::Kind::VStep:
      if (k > caps.max_v_steps)
        throw Error(Errc::CapExceeded, "V-step count " + std::to_string(k) + " exceeds cap " +
                                           std::to_string(caps.max_v_steps));
      for (unsigned i = 0; i < k; ++i) f = v_step(f);
      return f;
    case IterationScheme::Kind::Newton:
      require_root_order(scheme.p);
      if (k > caps.max_newton_k)
        throw Error(Errc::CapExceeded, "Newton k " + std::to_string(k) + " exceeds cap " +
                                           std::to_string(caps.max_newton_k));
      for (unsigned i = 0; i < k; ++i) f = newton_step(f, scheme.p);
      return f;
    case IterationScheme::Kind::Halley:
      require_root_order(scheme.p);
      if (k > caps.max_halley_k)
        throw Error(Errc::CapExceeded, "Halley k " + std::to_string(k) + " exceeds cap " +
                                           std::to_string(caps.max_halley_k));
      for (unsigned i = 0; i < k; ++i) f = halley_step(f, scheme.p);
      return f;
  }
  return f;
}

std::vector<RationalFunction> v_sequence(unsigned n, const IterationCaps& caps) {
  if (n > caps.max_v_steps)
    throw Error(Errc::CapExceeded, "V-step count " + std::to_string(n) + " exceeds cap " +
                                       std::to_string(caps.max_v_steps));
  std::vector<RationalFunction> out;
  out.reserve(n + 1);
  out.emplace_back();
  for (unsigned i = 0; i < n; ++i) out.push_back(v_step(out.back()));
  return out;
}

unsigned long equivalent_v_index(const IterationScheme& scheme, unsigned k) {
  unsigned long base = 1;
  switch (scheme.kind) {
    case IterationScheme::Kind::VStep: return k;
    case IterationScheme::Kind::Newton: base = 2; break;
    case IterationScheme::Kind::Halley: base = 3; break;
  }
  if (scheme.p != 2) throw Error(Errc::BadRootOrder, "V-sequence correspondence holds only for p = 2");
  unsigned long power = 1;
  for (unsigned i = 0; i < k; ++i) power *= base;
  return power - 1;
}

}  // namespace chebsqrt
