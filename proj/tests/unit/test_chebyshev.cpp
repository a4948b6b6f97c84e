#include <doctest.h>

#include "chebsqrt/chebyshev.hpp"
#include "chebsqrt/errors.hpp"
#include "oracles.hpp"

using namespace chebsqrt;

namespace {

Polynomial P(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("exact coefficients") {
  CHECK(cheb_poly(ChebKind::First, 0) == P({1}));
  CHECK(cheb_poly(ChebKind::First, 2) == P({-1, 0, 2}));
  CHECK(cheb_poly(ChebKind::Second, 2) == P({-1, 0, 4}));
  CHECK(cheb_poly(ChebKind::Second, 3) == P({0, -4, 0, 8}));
}

TEST_CASE("recurrence, derivative identity and parity up to n = 64") {
  const Polynomial two_x = Polynomial::monomial(2, 1);
  for (unsigned n = 1; n < 64; ++n) {
    for (ChebKind kind : {ChebKind::First, ChebKind::Second})
      CHECK(cheb_poly(kind, n + 1) == two_x * cheb_poly(kind, n) - cheb_poly(kind, n - 1));
  }
  for (unsigned n = 0; n <= 64; ++n) {
    CHECK(cheb_poly(ChebKind::Second, n) * Rational(n + 1) == cheb_poly(ChebKind::First, n + 1).derivative());
    for (ChebKind kind : {ChebKind::First, ChebKind::Second}) {
      const Polynomial poly = cheb_poly(kind, n);
      const auto& cs = poly.coeffs();
      for (std::size_t i = 0; i < cs.size(); ++i)
        if ((i + n) % 2 == 1) CHECK(cs[i] == 0);
    }
  }
}

TEST_CASE("evaluation examples") {
  const unsigned prec = 256;
  const BigFloat tol = exp2i(-(static_cast<long>(prec) - 8), prec);
  for (unsigned n = 0; n < 20; ++n) CHECK(cheb_eval(ChebKind::First, n, BigFloat(1L, prec)) == BigFloat(1L, prec));
  CHECK(abs(cheb_eval(ChebKind::First, 3, cos_pi_fraction(1, 6, prec))) < tol);
  BigFloat x(Rational(5, 4), prec);
  BigFloat v = cheb_eval(ChebKind::First, 5, x);
  CHECK(abs(v - oracle::chebyshev_t_explicit(5, x)) < tol * abs(v));
}

TEST_CASE("Clenshaw agrees with the explicit (x +- sqrt(x^2-1))^n forms for x > 1") {
  const unsigned prec = 256;
  const BigFloat tol = exp2i(-(static_cast<long>(prec) - 10), prec);
  for (const Rational& xr : {Rational(11, 10), Rational(3, 2), Rational(2)}) {
    BigFloat x(xr, prec);
    for (unsigned n = 0; n <= 32; ++n) {
      BigFloat t = cheb_eval(ChebKind::First, n, x);
      BigFloat u = cheb_eval(ChebKind::Second, n, x);
      CHECK(abs(t - oracle::chebyshev_t_explicit(n, x)) <= tol * abs(t));
      CHECK(abs(u - oracle::chebyshev_u_explicit(n, x)) <= tol * abs(u));
    }
  }
}

TEST_CASE("Clenshaw matches the defining identity T_n(cos t) = cos(n t)") {
  const unsigned prec = 256;
  const BigFloat tol = exp2i(-(static_cast<long>(prec) - 12), prec);
  for (unsigned n = 0; n <= 40; ++n) {
    for (long j = 1; j < 13; ++j) {
      BigFloat x = cos_pi_fraction(j, 13, prec);
      CHECK(abs(cheb_eval(ChebKind::First, n, x) - cos_pi_fraction(static_cast<long>(n) * j, 13, prec)) < tol);
    }
  }
}

TEST_CASE("zeros of U_n") {
  const unsigned prec = 256;
  auto n1 = u_zero_nodes(1, prec);
  REQUIRE(n1.size() == 1);
  CHECK(n1[0].is_zero());

  auto n2 = u_zero_nodes(2, prec);
  REQUIRE(n2.size() == 2);
  const BigFloat tol = exp2i(-250, prec);
  CHECK(abs(n2[0] - BigFloat(Rational(1, 2), prec)) < tol);
  CHECK(abs(n2[1] + BigFloat(Rational(1, 2), prec)) < tol);

  auto n3 = u_zero_nodes(3, prec);
  CHECK(abs(n3[0] - sqrt(BigFloat(Rational(1, 2), prec))) < tol);
  CHECK(n3[1].is_zero());
  CHECK(n3[2] == -n3[0]);

  CHECK_THROWS_AS(u_zero_nodes(0, prec), Error);

  for (unsigned n = 1; n <= 64; ++n) {
    auto nodes = u_zero_nodes(n, prec);
    CHECK(nodes.size() == n);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) CHECK(nodes[i] > nodes[i + 1]);
  }
}

TEST_CASE("U_n at a rounded node is bounded by |U_n'| times the rounding error") {
  // U_n'(cos t_k) = (-1)^(k+1) (n+1) / sin^2 t_k at t_k = k pi/(n+1).
  const unsigned prec = 256;
  for (unsigned n = 1; n <= 64; ++n) {
    auto nodes = u_zero_nodes(n, prec);
    for (unsigned k = 1; k <= n; ++k) {
      const BigFloat s = sin_pi_fraction(k, n + 1, prec);
      const BigFloat slope = BigFloat(static_cast<long>(n + 1), prec) / (s * s);
      const BigFloat bound = slope * exp2i(-static_cast<long>(prec), prec) * BigFloat(2L, prec);
      CHECK(abs(cheb_eval(ChebKind::Second, n, nodes[k - 1])) <= bound);
    }
  }
}

TEST_CASE("node property at the stated tolerance 2^-(precision-12) for n <= 64") {
  // Known to fail for some n >= 44: a 256-bit node is off by up to 2^-257 and
  // |U_n'| reaches about 2^15 at the outer nodes.
  const unsigned prec = 256;
  const BigFloat node_tol = exp2i(-(static_cast<long>(prec) - 12), prec);
  for (unsigned n = 1; n <= 64; ++n) {
    for (const auto& x : u_zero_nodes(n, prec)) {
      INFO("n = " << n << ", node = " << to_string(x, 20));
      CHECK(abs(cheb_eval(ChebKind::Second, n, x)) <= node_tol);
    }
  }
}
