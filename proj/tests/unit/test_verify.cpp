#include <doctest.h>

#include "chebsqrt/errors.hpp"
#include "chebsqrt/verify.hpp"

using namespace chebsqrt;

namespace {

constexpr unsigned kPrec = 256;

Complex C(long re, long im = 0) { return Complex(BigFloat(re, kPrec), BigFloat(im, kPrec)); }

}  // namespace

TEST_CASE("sqrt_principal examples") {
  CHECK(sqrt_principal(C(0)).re == BigFloat(1L, kPrec));
  Complex at_one = sqrt_principal(C(1));
  CHECK(at_one.re.is_zero());
  CHECK(at_one.im.is_zero());
  CHECK(sqrt_principal(C(-3)).re == BigFloat(2L, kPrec));
  try {
    sqrt_principal(C(2));
    FAIL("expected OnBranchCut");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OnBranchCut);
  }
}

TEST_CASE("sqrt_principal self-consistency over a grid") {
  const DiskGrid grid = make_disk_grid(BigFloat(1L, kPrec), 8, 16);
  const BigFloat tol = exp2i(-(static_cast<long>(kPrec) - 8), kPrec);
  for (const auto& z : grid.points) {
    Complex w = sqrt_principal(z);
    Complex one_minus(BigFloat(1L, kPrec) - z.re, -z.im);
    CHECK(abs(w * w - one_minus) <= tol);
    CHECK(w.re.sign() >= 0);
  }
}

TEST_CASE("disk grid shape") {
  DiskGrid g = make_disk_grid(BigFloat(1L, kPrec), 16, 32);
  CHECK(g.points.size() == 1 + 16 * 32);
  for (const auto& z : g.points) CHECK(abs(z) <= BigFloat(1L, kPrec) + exp2i(-250, kPrec));
  // z = 1 is on the grid exactly and is removed by the exclusion filter.
  CHECK(std::any_of(g.points.begin(), g.points.end(), [](const Complex& z) {
    return z.re == BigFloat(1L, kPrec) && z.im.is_zero();
  }));
  CHECK(excluding_near_one(g).points.size() == g.points.size() - 1);
  CHECK_THROWS_AS(make_disk_grid(BigFloat(2L, kPrec), 4, 4), Error);
}

TEST_CASE("head and tail sign checks") {
  CHECK(check_head(1).passed());
  CHECK(check_head(2).passed());
  CHECK(check_head(3).passed());
  CHECK(check_tail_signs(2, 16).passed());
  CHECK(check_tail_signs(3, 16).passed());
  CheckResult v1 = check_tail_signs(1, 16);
  CHECK(v1.status == CheckStatus::Skip);
  CHECK_FALSE(v1.note.empty());
  CHECK_THROWS_AS(check_tail_signs(5, 5), Error);
}

TEST_CASE("disk bound") {
  const DiskGrid grid = make_disk_grid(BigFloat(1L, kPrec), 16, 32);
  CheckResult v2 = check_disk_bound(IterationScheme::v_step(), 2, grid, kPrec);
  CHECK(v2.passed());
  CHECK(v2.samples == grid.points.size());
  CHECK(check_disk_bound(IterationScheme::newton(2), 2, grid, kPrec).passed());
  CHECK(check_disk_bound(IterationScheme::halley(2), 2, grid, kPrec).passed());
  CHECK(check_disk_bound(IterationScheme::v_step(), 0, grid, kPrec).status == CheckStatus::Skip);
  CHECK_THROWS_AS(check_disk_bound(IterationScheme::newton(3), 2, grid, kPrec), Error);
}

TEST_CASE("uniform convergence on compact disks") {
  CheckResult half = check_uniform_compact(16, BigFloat(Rational(1, 2), kPrec));
  CHECK(half.passed());
  CHECK(check_uniform_compact(16, BigFloat(Rational(9, 10), kPrec)).passed());
  CHECK_THROWS_AS(check_uniform_compact(4, BigFloat(1L, kPrec)), Error);
}

TEST_CASE("uniform convergence: sup drops tenfold from n = 8 to n = 16 on radius 0.9") {
  const CheckResult r8 = check_uniform_compact(8, BigFloat(Rational(9, 10), kPrec));
  const CheckResult r16 = check_uniform_compact(16, BigFloat(Rational(9, 10), kPrec));
  // worst_case.observed holds the sup at n_max.
  const double s8 = BigFloat(r8.worst_case.observed, 64).to_double();
  const double s16 = BigFloat(r16.worst_case.observed, 64).to_double();
  CHECK(s16 * 10 <= s8);
}

TEST_CASE("ratio identity") {
  CHECK(check_ratio_identity(0, {Rational(1, 2)}, kPrec).passed());
  CHECK(check_ratio_identity(2, {Rational(1, 2)}, kPrec).passed());
  CHECK(check_ratio_identity(5, {Rational(9, 10)}, kPrec).passed());
  for (unsigned n = 0; n <= 32; ++n) CHECK(check_ratio_identity(n, default_ratio_samples(), kPrec).passed());
  CHECK_THROWS_AS(check_ratio_identity(2, {Rational(3, 2)}, kPrec), Error);

  // n = 2, x = 1/2: both sides equal ((1 - s)/(1 + s))^3 with s = sqrt(1/2), about 0.005076.
  const BigFloat s = sqrt(BigFloat(Rational(1, 2), kPrec));
  const BigFloat one(1L, kPrec);
  const double rhs = pow((one - s) / (one + s), 3).to_double();
  CHECK(rhs == doctest::Approx(0.005076).epsilon(1e-3));
}

TEST_CASE("exact identities") {
  for (unsigned k = 1; k <= 4; ++k) CHECK(check_structural_identity(IterationScheme::newton(2), k).passed());
  for (unsigned k = 1; k <= 3; ++k) CHECK(check_structural_identity(IterationScheme::halley(2), k).passed());
  for (unsigned n = 0; n <= 20; ++n) CHECK(check_value_at_one(n).passed());
}

TEST_CASE("tail-sum check honours its tolerance") {
  CHECK(check_tail_sum(2, 40, Rational(1, 1000000)).passed());
  CHECK(check_tail_sum(1, 10, Rational(1, 1000000)).passed());
  // A short cutoff leaves a gap larger than a tight tolerance.
  CheckResult tight = check_tail_sum(8, 12, Rational(1, 1000000));
  CHECK(tight.failed());
}

TEST_CASE("pole consistency") {
  for (unsigned n = 2; n <= 16; ++n) CHECK(check_pole_consistency(n, 2 * kPrec, exp2i(-200, 2 * kPrec)).passed());
  CHECK(check_pole_consistency(1, kPrec, exp2i(-200, kPrec)).status == CheckStatus::Skip);
}

TEST_CASE("mu bound and monotone improvement") {
  CHECK(check_mu_bound(2000, 128).passed());
  const DiskGrid grid = make_disk_grid(BigFloat(1L, kPrec), 8, 16);
  for (unsigned n = 1; n <= 6; ++n) CHECK(check_monotone_improvement(n, grid, kPrec).passed());
}

TEST_CASE("Guo explorer examples") {
  GuoReport n2 = guo_explore(IterationScheme::newton(2), 2, 16);
  CHECK(n2.head_agreement_length >= 4);
  CHECK_FALSE(n2.first_sign_violation.has_value());

  GuoReport h1 = guo_explore(IterationScheme::halley(2), 1, 16);
  CHECK(h1.head_agreement_length >= 3);
  CHECK_FALSE(h1.first_sign_violation.has_value());

  GuoReport p3 = guo_explore(IterationScheme::newton(3), 1, 8);
  CHECK(p3.head_agreement_length >= 2);
  CHECK(p3.first_sign_violation == std::optional<std::size_t>(2));  // 1 - z/3 has a zero tail
  CHECK(p3.coeffs_checked == 9);

  CHECK_THROWS_AS(guo_explore(IterationScheme::v_step(), 1, 8), Error);
  IterationCaps caps;
  caps.max_coeff_index = 10;
  CHECK_THROWS_AS(guo_explore(IterationScheme::newton(2), 1, 11, caps), Error);
}

TEST_CASE("Guo sign pattern at p = 2 for the proved range") {
  for (unsigned k = 2; k <= 4; ++k) CHECK(check_guo_p2(IterationScheme::newton(2), k, 256).passed());
  for (unsigned k = 1; k <= 3; ++k) CHECK(check_guo_p2(IterationScheme::halley(2), k, 256).passed());
  CHECK(check_guo_p2(IterationScheme::newton(2), 1, 16).passed());
  CHECK_FALSE(guo_pattern_proved(IterationScheme::newton(2), 1));
}

TEST_CASE("suite runner is deterministic and rejects unknown names") {
  SuiteOptions opts;
  opts.n_max = 4;
  opts.radial_steps = 4;
  opts.angular_steps = 8;
  auto a = run_suite(opts, {"head", "value-at-one"});
  auto b = run_suite(opts, {"value-at-one", "head"});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].params == b[i].params);
  }
  CHECK(a.front().name == "head");
  CHECK_THROWS_AS(run_suite(opts, {"nope"}), Error);
}
