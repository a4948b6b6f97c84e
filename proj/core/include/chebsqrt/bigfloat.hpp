#pragma once

#include <mpfr.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chebsqrt/rational.hpp"

namespace chebsqrt {

/// Mantissa bits used when a caller does not choose.
inline constexpr unsigned kDefaultPrecision = 256;
inline constexpr unsigned kMinPrecision = 64;

/// Owning wrapper around an MPFR value. Every value carries its own precision;
/// binary operations round to the larger of the operand precisions, to nearest.
class BigFloat {
 public:
  explicit BigFloat(unsigned precision = kDefaultPrecision);
  BigFloat(long v, unsigned precision);
  BigFloat(double v, unsigned precision);
  BigFloat(const Rational& q, unsigned precision);
  /// Decimal or scientific notation; throws Error{ParseError}.
  BigFloat(std::string_view text, unsigned precision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  unsigned precision() const noexcept { return static_cast<unsigned>(mpfr_get_prec(v_)); }

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent() const { return mpfr_get_exp(v_); }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat pow(const BigFloat& x, unsigned long e);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
BigFloat log2(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat pi(unsigned precision);
/// 2^e exactly.
BigFloat exp2i(long e, unsigned precision);
/// x rounded to nearest at the given precision (exact when widening).
BigFloat with_precision(const BigFloat& x, unsigned precision);
/// +infinity.
BigFloat infinity(unsigned precision);

/// cos(k*pi/d) and sin(k*pi/d), using the symmetries of the circle so that
/// exact zeros and sign flips come out exactly.
BigFloat cos_pi_fraction(long k, long d, unsigned precision);
BigFloat sin_pi_fraction(long k, long d, unsigned precision);

/// Shortest decimal string that reads back to the same value at its precision.
/// "inf"/"-inf"/"nan" for non-finite values.
std::string to_string(const BigFloat& x);
/// Fixed number of significant digits.
std::string to_string(const BigFloat& x, int significant_digits);

std::vector<BigFloat> to_bigfloat(std::span<const Rational> coeffs, unsigned precision);

}  // namespace chebsqrt
