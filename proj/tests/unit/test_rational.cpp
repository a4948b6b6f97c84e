#include <doctest.h>

#include "chebsqrt/errors.hpp"
#include "chebsqrt/rational.hpp"
#include "oracles.hpp"

using namespace chebsqrt;

TEST_CASE("make_rational canonicalizes and rejects zero denominators") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  try {
    make_rational(1, 0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroDenominator);
  }
}

TEST_CASE("rational text form") {
  CHECK(to_string(Rational(-1, 8)) == "-1/8");
  CHECK(to_string(Rational(3)) == "3");
  CHECK(parse_rational("-1/8") == Rational(-1, 8));
  CHECK(parse_rational("12/8") == Rational(3, 2));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("lambda and mu examples") {
  CHECK(lambda_coeff(0) == 1);
  CHECK(lambda_coeff(1) == Rational(-1, 2));
  CHECK(lambda_coeff(2) == Rational(-1, 8));
  CHECK(mu_coeff(0) == 1);
  CHECK(mu_coeff(2) == Rational(3, 8));
  CHECK(mu_coeff(1) - mu_coeff(2) == -lambda_coeff(2));
}

TEST_CASE("lambda_m = mu_m - mu_{m-1} < 0 for m >= 1") {
  for (std::uint64_t m = 1; m <= 200; ++m) {
    CHECK(lambda_coeff(m) == mu_coeff(m) - mu_coeff(m - 1));
    CHECK(lambda_coeff(m) < 0);
  }
}

TEST_CASE("p-th root series") {
  CHECK(proot_series_coeff(2, 2) == Rational(-1, 8));
  CHECK(proot_series_coeff(3, 1) == Rational(-1, 3));
  for (int p = 2; p <= 7; ++p) CHECK(proot_series_coeff(p, 0) == 1);
  CHECK_THROWS_AS(proot_series_coeff(1, 3), Error);

  const auto sq = proot_series(2, 120);
  for (std::size_t m = 0; m <= 120; ++m) CHECK(sq[m] == lambda_coeff(m));

  for (int p = 2; p <= 6; ++p) {
    const auto c = proot_series(p, 40);
    for (std::size_t m = 0; m <= 40; ++m) {
      CHECK(c[m] == oracle::binomial_root_coeff(p, m));
      if (m >= 1) CHECK(c[m] < 0);
    }
  }
}
