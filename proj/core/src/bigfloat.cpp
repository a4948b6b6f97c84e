#include "chebsqrt/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "chebsqrt/errors.hpp"

namespace chebsqrt {

namespace {

mpfr_prec_t checked(unsigned precision) {
  return static_cast<mpfr_prec_t>(std::max<unsigned>(precision, MPFR_PREC_MIN));
}

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) {
  return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}

}  // namespace

BigFloat::BigFloat(unsigned precision) {
  mpfr_init2(v_, checked(precision));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, unsigned precision) {
  mpfr_init2(v_, checked(precision));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, unsigned precision) {
  mpfr_init2(v_, checked(precision));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, unsigned precision) {
  mpfr_init2(v_, checked(precision));
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view text, unsigned precision) {
  mpfr_init2(v_, checked(precision));
  std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    mpfr_clear(v_);
    throw Error(Errc::ParseError, "not a number: '" + s + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(static_cast<unsigned>(joint(a, b)));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(static_cast<unsigned>(joint(a, b)));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(static_cast<unsigned>(joint(a, b)));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(static_cast<unsigned>(joint(a, b)));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, unsigned long e) {
  BigFloat r(x.precision());
  mpfr_pow_ui(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat log2(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log2(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pi(unsigned precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat exp2i(long e, unsigned precision) {
  BigFloat r(precision);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

BigFloat infinity(unsigned precision) {
  BigFloat r(precision);
  mpfr_set_inf(r.get(), 1);
  return r;
}

BigFloat with_precision(const BigFloat& x, unsigned precision) {
  BigFloat out(precision);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat cos_pi_fraction(long k, long d, unsigned precision) {
  // Reduce k*pi/d to an angle in [0, pi/2] and track the sign.
  const long period = 2 * d;
  long r = ((k % period) + period) % period;  // angle r*pi/d in [0, 2pi)
  if (r > d) r = period - r;                  // cos is even about pi
  int s = 1;
  if (2 * r > d) {                            // pi/2 < angle <= pi
    r = d - r;
    s = -1;
  }
  if (2 * r == d) return BigFloat(precision);
  if (r == 0) return BigFloat(static_cast<long>(s), precision);
  BigFloat angle = pi(precision + 16) * BigFloat(r, precision + 16) / BigFloat(d, precision + 16);
  BigFloat out = with_precision(cos(angle), precision);
  return s < 0 ? -out : out;
}

BigFloat sin_pi_fraction(long k, long d, unsigned precision) {
  // sin(x) = cos(x - pi/2)
  return cos_pi_fraction(2 * k - d, 2 * d, precision);
}

std::string to_string(const BigFloat& x, int significant_digits) {
  if (mpfr_nan_p(x.get())) return "nan";
  if (mpfr_inf_p(x.get())) return x.sign() < 0 ? "-inf" : "inf";
  if (x.is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(significant_digits), x.get(), MPFR_RNDN),
      mpfr_free_str);
  std::string digits(raw.get());
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.erase(0, 1);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  // value = 0.DIGITS * 10^exp10
  std::string out;
  const long e = static_cast<long>(exp10);
  const long n = static_cast<long>(digits.size());
  if (e > 0 && e <= 21) {
    if (n <= e) {
      out = digits + std::string(static_cast<std::size_t>(e - n), '0');
    } else {
      out = digits.substr(0, static_cast<std::size_t>(e)) + "." + digits.substr(static_cast<std::size_t>(e));
    }
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (n > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return negative ? "-" + out : out;
}

std::string to_string(const BigFloat& x) {
  if (!x.is_finite() || x.is_zero()) return to_string(x, 1);
  // Round-tripping is monotone in the digit count, so bisect.
  int lo = 1;
  int hi = static_cast<int>(mpfr_get_str_ndigits(10, mpfr_get_prec(x.get())));
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    BigFloat back(to_string(x, mid), x.precision());
    if (back == x) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return to_string(x, lo);
}

std::vector<BigFloat> to_bigfloat(std::span<const Rational> coeffs, unsigned precision) {
  std::vector<BigFloat> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.emplace_back(c, precision);
  return out;
}

}  // namespace chebsqrt
