#include "chebsqrt/rational.hpp"

#include <cctype>

#include "chebsqrt/errors.hpp"

namespace chebsqrt {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::ZeroDenominator, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(Errc::ParseError, "not a rational: '" + std::string(whole) + "'");
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(Errc::ParseError, "bad denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw Error(Errc::ZeroDenominator, "'" + std::string(text) + "'");
    return make_rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((int_part.empty() && frac.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac.empty() && !all_digits(frac)))
      throw Error(Errc::ParseError, "not a decimal: '" + std::string(text) + "'");
    Integer digits(std::string(int_part.empty() ? "0" : int_part) + std::string(frac), 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational q = make_rational(digits, scale);
    return negative ? Rational(-q) : q;
  }

  return Rational(parse_integer(text, text));
}

int sign(const Rational& q) { return sgn(q); }

Rational mu_coeff(std::uint64_t n) {
  Integer central;
  mpz_bin_uiui(central.get_mpz_t(), 2 * n, n);
  Integer four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  return make_rational(central, four_n);
}

Rational lambda_coeff(std::uint64_t m) {
  Rational mu = mu_coeff(m);
  Integer one_minus_2m = Integer(1) - Integer(2) * Integer(static_cast<unsigned long>(m));
  return mu / Rational(one_minus_2m);
}

Rational proot_series_coeff(int p, std::uint64_t m) {
  return proot_series(p, m).back();
}

std::vector<Rational> proot_series(int p, std::uint64_t max_index) {
  if (p < 2) throw Error(Errc::BadRootOrder, "root order p must be >= 2, got " + std::to_string(p));
  std::vector<Rational> c;
  c.reserve(max_index + 1);
  c.emplace_back(1);
  const Rational inv_p(1, p);
  for (std::uint64_t m = 1; m <= max_index; ++m) {
    // c_m = c_{m-1} (m - 1 - 1/p) / m
    Rational factor = (Rational(static_cast<unsigned long>(m - 1)) - inv_p) / Rational(static_cast<unsigned long>(m));
    c.push_back(c.back() * factor);
  }
  return c;
}

}  // namespace chebsqrt
