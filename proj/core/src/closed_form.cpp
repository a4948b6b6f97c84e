#include "chebsqrt/closed_form.hpp"

#include "chebsqrt/errors.hpp"
#include "chebsqrt/iterates.hpp"
#include "chebsqrt/series.hpp"

namespace chebsqrt {

namespace {

constexpr unsigned kGuardBits = 32;

}  // namespace

PartialFractionForm decompose(unsigned n, unsigned precision) {
  if (n < 1) throw Error(Errc::BadIndex, "partial fractions are defined for n >= 1");
  PartialFractionForm pf;
  pf.n = n;
  pf.precision = precision;
  pf.scale = BigFloat(1L, precision) / BigFloat(2L * (static_cast<long>(n) + 1), precision);
  // Half-angle forms keep exact cases exact: cos^2 t = (1 + cos 2t)/2 and
  // sin^2 2t = (1 - cos 4t)/2.
  const long d = static_cast<long>(n) + 1;
  const unsigned wp = precision + kGuardBits;
  const BigFloat one(1L, wp), two(2L, wp);
  for (long k = 1; k <= static_cast<long>(n / 2); ++k) {
    BigFloat w = (one - cos_pi_fraction(4 * k, d, wp)) / two;
    BigFloat c = (one + cos_pi_fraction(2 * k, d, wp)) / two;
    pf.terms.push_back({with_precision(w, precision), with_precision(c, precision)});
  }
  return pf;
}

Complex pf_eval(const PartialFractionForm& pf, const Complex& z) {
  const unsigned prec = pf.precision;
  const BigFloat one(1L, prec);
  const BigFloat near = exp2i(-static_cast<long>(prec / 2), prec);

  Complex sum(prec);
  for (const auto& t : pf.terms) {
    Complex pole(one / t.pole_param, BigFloat(prec));
    if (abs(z - pole) < near) throw Error(Errc::NearPole, "evaluation point within 2^-(p/2) of a pole");
    Complex denom = Complex(one, BigFloat(prec)) - t.pole_param * z;
    sum += Complex(t.weight, BigFloat(prec)) / denom;
  }
  Complex head(one - z.re / BigFloat(2L, prec), -(z.im / BigFloat(2L, prec)));
  return head - pf.scale * (z * z * sum);
}

BigFloat pf_eval(const PartialFractionForm& pf, const BigFloat& x) {
  return pf_eval(pf, Complex(x, BigFloat(x.precision()))).re;
}

BigFloat coeff_closed(unsigned n, unsigned m, unsigned precision) {
  if (n < 1) throw Error(Errc::BadIndex, "coefficient formula needs n >= 1");
  if (m < 1) throw Error(Errc::BadIndex, "coefficient formula covers m >= 1 only (A_0 = 1)");
  const unsigned wp = precision + kGuardBits;
  const long d = static_cast<long>(n) + 1;
  BigFloat sum(wp);
  for (long k = 1; k <= static_cast<long>(n); ++k) {
    BigFloat c = cos_pi_fraction(k, d, wp);
    BigFloat s = sin_pi_fraction(k, d, wp);
    sum += pow(c * c, m - 1) * (s * s);
  }
  return with_precision(-(sum / BigFloat(d, wp)), precision);
}

std::optional<BigFloat> radius_of_convergence(unsigned n, unsigned precision) {
  if (n <= 1) return std::nullopt;
  // sec^2 t = 2 / (1 + cos 2t)
  const unsigned wp = precision + kGuardBits;
  BigFloat c2 = cos_pi_fraction(2, static_cast<long>(n) + 1, wp);
  return with_precision(BigFloat(2L, wp) / (BigFloat(1L, wp) + c2), precision);
}

Rational tail_sum_identity(unsigned n) {
  if (n < 1) throw Error(Errc::BadIndex, "tail-sum identity needs n >= 1");
  return mu_coeff(n) - Rational(1, n + 1);
}

int CoeffEntry::sign() const {
  if (const auto* q = std::get_if<Rational>(&value)) return chebsqrt::sign(*q);
  return std::get<BigFloat>(value).sign();
}

std::string to_string(CoeffSource s) { return s == CoeffSource::Recurrence ? "recurrence" : "closed_form"; }

namespace {

void fill_tail_summary(CoeffReport& r) {
  for (const auto& e : r.coeffs) {
    if (e.m > r.n && e.sign() >= 0) {
      r.sign_summary.first_nonnegative_tail_index = e.m;
      break;
    }
  }
}

}  // namespace

CoeffReport coeff_report_exact(unsigned n, std::size_t max_index) {
  CoeffReport r;
  r.n = n;
  auto series = taylor_coefficients(iterate(IterationScheme::v_step(), n), max_index, "V_" + std::to_string(n));
  bool head = series.size() > n;
  for (std::size_t m = 0; m < series.size(); ++m) {
    if (m <= n && series[m] != lambda_coeff(m)) head = false;
    r.coeffs.push_back({m, series[m], CoeffSource::Recurrence});
  }
  r.sign_summary.head_match = head;
  fill_tail_summary(r);
  return r;
}

CoeffReport coeff_report_closed(unsigned n, std::size_t max_index, unsigned precision) {
  if (n < 1) throw Error(Errc::BadIndex, "closed-form coefficients need n >= 1");
  CoeffReport r;
  r.n = n;
  const BigFloat tol = exp2i(-static_cast<long>(precision) + 16, precision);
  bool head = max_index >= n;
  r.coeffs.push_back({0, Rational(1), CoeffSource::ClosedForm});
  for (std::size_t m = 1; m <= max_index; ++m) {
    BigFloat v = coeff_closed(n, static_cast<unsigned>(m), precision);
    if (m <= n && abs(v - BigFloat(lambda_coeff(m), precision)) > tol) head = false;
    r.coeffs.push_back({m, std::move(v), CoeffSource::ClosedForm});
  }
  r.sign_summary.head_match = head;
  fill_tail_summary(r);
  return r;
}

}  // namespace chebsqrt
