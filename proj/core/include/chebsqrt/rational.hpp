#pragma once

// Exact rational scalars and the binomial-series constants of sqrt(1 - z).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chebsqrt {

/// Arbitrary-precision rational. GMP keeps every mpq_class in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws Error{ZeroDenominator} when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" in base 10, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or a finite decimal such as "-0.125". Throws Error{ParseError}.
Rational parse_rational(std::string_view text);

/// -1, 0 or +1.
int sign(const Rational& q);

/// Central binomial ratio mu_n = C(2n, n) / 4^n.
Rational mu_coeff(std::uint64_t n);

/// Taylor coefficient of sqrt(1 - z): lambda_m = C(2m, m) / ((1 - 2m) 4^m).
Rational lambda_coeff(std::uint64_t m);

/// Coefficient of z^m in (1 - z)^(1/p). Throws Error{BadRootOrder} when p < 2.
Rational proot_series_coeff(int p, std::uint64_t m);

/// Coefficients 0..max_index of (1 - z)^(1/p) in one pass.
std::vector<Rational> proot_series(int p, std::uint64_t max_index);

}  // namespace chebsqrt
