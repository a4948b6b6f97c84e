#include <doctest.h>

#include "chebsqrt/complex.hpp"
#include "chebsqrt/errors.hpp"

using namespace chebsqrt;

TEST_CASE("precision is carried and joined") {
  BigFloat a(1L, 128);
  BigFloat b(3L, 256);
  CHECK(a.precision() == 128);
  CHECK((a / b).precision() == 256);
  CHECK(abs(a / b - BigFloat(Rational(1, 3), 512)) <= exp2i(-258, 512));
}

TEST_CASE("exact rationals convert exactly when dyadic") {
  CHECK(BigFloat(Rational(-3, 8), 64).to_double() == -0.375);
  CHECK(exp2i(-240, 256) * exp2i(240, 256) == BigFloat(1L, 256));
}

TEST_CASE("shortest round-trip formatting") {
  CHECK(to_string(BigFloat(Rational(3, 4), 256)) == "0.75");
  CHECK(to_string(BigFloat(4L, 256)) == "4");
  CHECK(to_string(BigFloat(Rational(-1, 8), 256)) == "-0.125");
  CHECK(to_string(infinity(64)) == "inf");
  CHECK(to_string(BigFloat(1e-30, 64)).find('e') != std::string::npos);
  BigFloat third(Rational(1, 3), 256);
  std::string s = to_string(third);
  CHECK(BigFloat(s, 256) == third);
  CHECK(s.size() > 70);
  CHECK_THROWS_AS(BigFloat("1.2.3", 64), Error);
}

TEST_CASE("trig at rational multiples of pi is exact on special angles") {
  CHECK(cos_pi_fraction(1, 2, 256).is_zero());
  CHECK(cos_pi_fraction(3, 2, 256).is_zero());
  CHECK(cos_pi_fraction(0, 5, 256) == BigFloat(1L, 256));
  CHECK(cos_pi_fraction(5, 5, 256) == BigFloat(-1L, 256));
  CHECK(sin_pi_fraction(1, 1, 256).is_zero());
  CHECK(sin_pi_fraction(1, 2, 256) == BigFloat(1L, 256));
  CHECK(cos_pi_fraction(2, 3, 256) == -cos_pi_fraction(1, 3, 256));
  const BigFloat half(Rational(1, 2), 256);
  CHECK(abs(cos_pi_fraction(1, 3, 256) - half) < exp2i(-250, 256));
  CHECK(abs(sin_pi_fraction(1, 6, 256) - half) < exp2i(-250, 256));
  // sin^2 + cos^2 = 1 across a sweep
  for (long k = 0; k < 40; ++k) {
    BigFloat c = cos_pi_fraction(k, 17, 256);
    BigFloat s = sin_pi_fraction(k, 17, 256);
    CHECK(abs(c * c + s * s - BigFloat(1L, 256)) < exp2i(-250, 256));
  }
}

TEST_CASE("principal complex square root") {
  const unsigned prec = 256;
  const BigFloat tol = exp2i(-248, prec);
  for (long re = -3; re <= 3; ++re) {
    for (long im = -3; im <= 3; ++im) {
      Complex z(BigFloat(re, prec), BigFloat(im, prec));
      Complex w = sqrt(z);
      CHECK(w.re.sign() >= 0);
      CHECK(abs(w * w - z) < tol * BigFloat(8L, prec));
    }
  }
  Complex neg(BigFloat(-4L, prec), BigFloat(prec));
  Complex w = sqrt(neg);
  CHECK(w.re.is_zero());
  CHECK(w.im == BigFloat(2L, prec));
}
