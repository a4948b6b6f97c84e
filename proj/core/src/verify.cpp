#include "chebsqrt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>
#include <thread>

#include "chebsqrt/closed_form.hpp"
#include "chebsqrt/errors.hpp"
#include "chebsqrt/series.hpp"

namespace chebsqrt {

namespace {

BigFloat slack(unsigned precision) { return exp2i(-static_cast<long>(precision) + 16, precision); }

std::string describe(const Complex& z) {
  return "z=" + to_string(z.re, 20) + (z.im.sign() < 0 ? "" : "+") + to_string(z.im, 20) + "i";
}

std::string num(const BigFloat& x) { return to_string(x, 20); }

CheckResult make_result(std::string name, std::string params) {
  CheckResult r;
  r.name = std::move(name);
  r.params = std::move(params);
  return r;
}

CheckResult skip(CheckResult r, std::string note) {
  r.status = CheckStatus::Skip;
  r.note = std::move(note);
  return r;
}

BigFloat two_over_sqrt_pi(unsigned precision) {
  return BigFloat(2L, precision) / sqrt(pi(precision));
}

// Tracks the sample with the smallest margin bound - observed.
// Keeps the sample with the largest observed/bound ratio.
struct WorstTracker {
  std::optional<BigFloat> ratio;
  WorstCase worst;

  void offer(const BigFloat& observed, const BigFloat& bound, const std::string& input) {
    BigFloat q(observed.precision());
    if (!bound.is_zero())
      q = abs(observed) / abs(bound);
    else if (!observed.is_zero())
      q = infinity(observed.precision());
    if (!ratio || q > *ratio) {
      ratio = q;
      worst = {input, num(observed), num(bound)};
    }
  }
};

}  // namespace

DiskGrid make_disk_grid(const BigFloat& radius, unsigned radial_steps, unsigned angular_steps) {
  if (radius.sign() <= 0 || radius > BigFloat(1L, radius.precision()))
    throw Error(Errc::InvalidArgument, "disk grid radius must lie in (0, 1]");
  if (radial_steps == 0 || angular_steps == 0) throw Error(Errc::InvalidArgument, "disk grid needs positive steps");
  DiskGrid g;
  g.radius = radius;
  g.radial_steps = radial_steps;
  g.angular_steps = angular_steps;
  const unsigned prec = radius.precision();
  g.points.emplace_back(prec);
  for (unsigned i = 1; i <= radial_steps; ++i) {
    BigFloat r = radius * BigFloat(static_cast<long>(i), prec) / BigFloat(static_cast<long>(radial_steps), prec);
    for (unsigned j = 0; j < angular_steps; ++j) g.points.push_back(polar_point(r, j, angular_steps));
  }
  return g;
}

DiskGrid excluding_near_one(DiskGrid grid) {
  const unsigned prec = grid.radius.precision();
  const BigFloat near = exp2i(-static_cast<long>(prec / 2), prec);
  const Complex one(BigFloat(1L, prec), BigFloat(prec));
  std::erase_if(grid.points, [&](const Complex& z) { return abs(z - one) < near; });
  return grid;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

Complex sqrt_principal(const Complex& z) {
  const unsigned prec = z.precision();
  if (z.im.is_zero() && z.re > BigFloat(1L, prec))
    throw Error(Errc::OnBranchCut, "sqrt(1 - z) is cut along real z > 1 (" + describe(z) + ")");
  Complex w(BigFloat(1L, prec) - z.re, -z.im);
  return sqrt(w);
}

CheckResult check_head(unsigned n) {
  CheckResult r = make_result("head", "n=" + std::to_string(n));
  auto series = taylor_coefficients(iterate(IterationScheme::v_step(), n), n);
  r.samples = series.size();
  for (std::size_t m = 0; m <= n; ++m) {
    if (series[m] != lambda_coeff(m)) {
      r.status = CheckStatus::Fail;
      r.worst_case = {"m=" + std::to_string(m), to_string(series[m]), to_string(lambda_coeff(m))};
      return r;
    }
  }
  r.worst_case = {"m=" + std::to_string(n), to_string(series[n]), to_string(lambda_coeff(n))};
  return r;
}

CheckResult check_tail_signs(unsigned n, std::size_t max_index) {
  CheckResult r = make_result("tail-signs", "n=" + std::to_string(n) + ",M=" + std::to_string(max_index));
  if (max_index <= n) throw Error(Errc::InvalidArgument, "tail-sign cutoff M must exceed n");
  if (n <= 1) return skip(r, "V_" + std::to_string(n) + " is a polynomial; its tail is identically zero");
  auto series = taylor_coefficients(iterate(IterationScheme::v_step(), n), max_index);
  std::optional<Rational> largest;
  std::size_t at = n + 1;
  for (std::size_t m = n + 1; m <= max_index; ++m) {
    ++r.samples;
    if (!largest || series[m] > *largest) {
      largest = series[m];
      at = m;
    }
  }
  r.worst_case = {"m=" + std::to_string(at), to_string(*largest), "<0"};
  if (sign(*largest) >= 0) r.status = CheckStatus::Fail;
  return r;
}

CheckResult check_disk_bound(const IterationScheme& scheme, unsigned k, const DiskGrid& grid, unsigned precision) {
  CheckResult r = make_result("disk-bound", "scheme=" + scheme.name() + ",k=" + std::to_string(k));
  if (scheme.kind != IterationScheme::Kind::VStep && scheme.p != 2)
    throw Error(Errc::BadRootOrder, "disk bounds are established only for p = 2");
  if (k == 0) return skip(r, "no bound is stated for the constant iterate");

  BigFloat coef(precision);
  unsigned long exponent = 0;
  const unsigned long v_index = equivalent_v_index(scheme, k);
  if (scheme.kind == IterationScheme::Kind::VStep) {
    coef = BigFloat(2L, precision) / sqrt(pi(precision) * BigFloat(static_cast<long>(k), precision));
    exponent = k + 1ul;
  } else {
    coef = two_over_sqrt_pi(precision) / sqrt(BigFloat(static_cast<long>(v_index), precision));
    exponent = v_index + 1;
  }

  const RationalFunction exact = iterate(scheme, k);
  const FloatRationalFunction f = to_float(exact, precision + horner_guard_bits(exact));
  const BigFloat eps = slack(precision);
  WorstTracker worst;
  for (const auto& z0 : grid.points) {
    Complex z(BigFloat(z0.re), BigFloat(z0.im));
    BigFloat observed = abs(f(z) - sqrt_principal(z));
    BigFloat bound = coef * pow(abs(z), exponent);
    worst.offer(observed, bound, describe(z));
    ++r.samples;
    if (observed > bound + eps) r.status = CheckStatus::Fail;
  }
  r.worst_case = worst.worst;
  return r;
}

CheckResult check_uniform_compact(unsigned n_max, const BigFloat& compact_radius, unsigned radial_steps,
                                  unsigned angular_steps) {
  const unsigned prec = compact_radius.precision();
  CheckResult r = make_result("uniform-compact", "radius=" + to_string(compact_radius, 6) + ",n_max=" + std::to_string(n_max));
  if (!(compact_radius < BigFloat(1L, prec))) throw Error(Errc::InvalidArgument, "compact radius must be < 1");
  if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be >= 1");

  const DiskGrid grid = make_disk_grid(compact_radius, radial_steps, angular_steps);
  const BigFloat one(1L, prec);
  std::vector<Complex> roots;
  BigFloat q(prec);
  BigFloat s_max(prec);
  for (const auto& z : grid.points) {
    Complex s = sqrt_principal(z);
    Complex one_c(one, BigFloat(prec));
    q = max(q, abs((one_c - s) / (one_c + s)));
    s_max = max(s_max, abs(s));
    roots.push_back(std::move(s));
  }

  const BigFloat eps = slack(prec);
  auto seq = v_sequence(n_max);
  std::optional<BigFloat> previous;
  std::ostringstream sups;
  for (unsigned n = 1; n <= n_max; ++n) {
    const FloatRationalFunction f = to_float(seq[n], prec + horner_guard_bits(seq[n]));
    BigFloat sup(prec);
    for (std::size_t i = 0; i < grid.points.size(); ++i) sup = max(sup, abs(f(grid.points[i]) - roots[i]));
    BigFloat qn = pow(q, n + 1ul);
    BigFloat envelope = BigFloat(2L, prec) * s_max * qn / (one - qn);
    r.samples += grid.points.size();
    if (sup > envelope + eps) {
      r.status = CheckStatus::Fail;
      r.worst_case = {"n=" + std::to_string(n), num(sup), num(envelope)};
    }
    if (previous && sup > *previous + eps) {
      r.status = CheckStatus::Fail;
      r.worst_case = {"n=" + std::to_string(n) + " (monotonicity)", num(sup), num(*previous)};
    }
    if (r.status == CheckStatus::Pass) r.worst_case = {"n=" + std::to_string(n), num(sup), num(envelope)};
    sups << (n == 1 ? "" : " ") << to_string(sup, 4);
    previous = std::move(sup);
  }
  r.note = "q=" + to_string(q, 8) + "; sup by n: " + sups.str();
  return r;
}

std::vector<Rational> default_ratio_samples() {
  return {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(9, 10)};
}

CheckResult check_ratio_identity(unsigned n, const std::vector<Rational>& samples, unsigned precision) {
  CheckResult r = make_result("ratio-identity", "n=" + std::to_string(n));
  const RationalFunction v = iterate(IterationScheme::v_step(), n);
  const BigFloat one(1L, precision);
  const BigFloat eps = slack(precision);
  WorstTracker worst;
  for (const auto& x : samples) {
    if (x <= 0 || x >= 1) throw Error(Errc::InvalidArgument, "ratio-identity samples must lie in (0, 1)");
    BigFloat vx(v(x), precision);
    BigFloat s = sqrt(one - BigFloat(x, precision));
    BigFloat lhs = (vx - s) / (vx + s);
    BigFloat rhs = pow((one - s) / (one + s), n + 1ul);
    BigFloat diff = abs(lhs - rhs);
    worst.offer(diff, eps, "x=" + to_string(x));
    ++r.samples;
    if (diff > eps) r.status = CheckStatus::Fail;
  }
  r.worst_case = worst.worst;
  return r;
}

CheckResult check_structural_identity(const IterationScheme& scheme, unsigned k) {
  CheckResult r = make_result("structural", "scheme=" + scheme.name() + ",k=" + std::to_string(k));
  if (scheme.kind == IterationScheme::Kind::VStep) throw Error(Errc::InvalidArgument, "structural identity compares Newton/Halley to V");
  const unsigned long idx = equivalent_v_index(scheme, k);
  IterationCaps caps;
  caps.max_v_steps = std::max<unsigned>(caps.max_v_steps, static_cast<unsigned>(idx));
  const RationalFunction lhs = iterate(scheme, k, caps);
  const RationalFunction rhs = iterate(IterationScheme::v_step(), static_cast<unsigned>(idx), caps);
  r.samples = 1;
  r.worst_case = {"V_" + std::to_string(idx), "deg " + std::to_string(lhs.num().degree()) + "/" + std::to_string(lhs.den().degree()),
                  "deg " + std::to_string(rhs.num().degree()) + "/" + std::to_string(rhs.den().degree())};
  if (!(lhs == rhs)) r.status = CheckStatus::Fail;
  return r;
}

CheckResult check_value_at_one(unsigned n) {
  CheckResult r = make_result("value-at-one", "n=" + std::to_string(n));
  const Rational value = iterate(IterationScheme::v_step(), n)(Rational(1));
  const Rational expected(1, n + 1);
  r.samples = 1;
  r.worst_case = {"z=1", to_string(value), to_string(expected)};
  if (value != expected) r.status = CheckStatus::Fail;
  return r;
}

std::vector<ComplexRational> resummation_points() {
  const std::vector<ComplexRational> directions = {
      {1, 0}, {Rational(3, 5), Rational(4, 5)}, {0, 1}, {Rational(-4, 5), Rational(3, 5)},
      {-1, 0}, {Rational(-3, 5), Rational(-4, 5)}, {0, -1}, {Rational(4, 5), Rational(-3, 5)},
  };
  const std::vector<Rational> radii = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(7, 8)};
  std::vector<ComplexRational> pts;
  for (const auto& rad : radii)
    for (const auto& d : directions) pts.push_back({rad * d.re, rad * d.im});
  return pts;
}

CheckResult check_resummation(unsigned n, const std::vector<ComplexRational>& points, unsigned precision) {
  CheckResult r = make_result("resummation", "n=" + std::to_string(n));
  const RationalFunction v = iterate(IterationScheme::v_step(), n);
  const PartialFractionForm pf = decompose(n, precision);
  const BigFloat eps = slack(precision);
  WorstTracker worst;
  for (const auto& z : points) {
    Complex exact(v(z), precision);
    Complex zf(z, precision);
    BigFloat diff = abs(pf_eval(pf, zf) - exact);
    worst.offer(diff, eps, describe(zf));
    ++r.samples;
    if (diff > eps) r.status = CheckStatus::Fail;
  }
  r.worst_case = worst.worst;
  return r;
}

CheckResult check_coeff_formula(unsigned n, std::size_t max_index, unsigned precision) {
  CheckResult r = make_result("coeff-formula", "n=" + std::to_string(n) + ",M=" + std::to_string(max_index));
  const auto series = taylor_coefficients(iterate(IterationScheme::v_step(), n), max_index);
  const BigFloat eps = slack(precision);
  WorstTracker worst;
  for (std::size_t m = 1; m <= max_index; ++m) {
    BigFloat closed = coeff_closed(n, static_cast<unsigned>(m), precision);
    BigFloat diff = abs(closed - BigFloat(series[m], precision));
    worst.offer(diff, eps, "m=" + std::to_string(m));
    ++r.samples;
    if (diff > eps || closed.sign() >= 0) {
      r.status = CheckStatus::Fail;
      if (closed.sign() >= 0) r.note = "non-negative closed-form coefficient at m=" + std::to_string(m);
    }
  }
  r.worst_case = worst.worst;
  return r;
}

CheckResult check_pole_consistency(unsigned n, unsigned precision, const BigFloat& threshold) {
  CheckResult r = make_result("pole-consistency", "n=" + std::to_string(n));
  if (n < 2) return skip(r, "V_" + std::to_string(n) + " is a polynomial and has no poles");
  const RationalFunction v = iterate(IterationScheme::v_step(), n);
  const std::vector<BigFloat> den = to_bigfloat(v.den().coeffs(), precision);
  const PartialFractionForm pf = decompose(n, precision);
  const BigFloat radius = *radius_of_convergence(n, precision);
  const BigFloat zero(precision);

  BigFloat at_radius = abs(horner<BigFloat>(den, radius, zero));
  r.worst_case = {"z=sec^2(pi/(n+1))", num(at_radius), num(threshold)};
  ++r.samples;
  if (!(at_radius < threshold)) r.status = CheckStatus::Fail;

  const BigFloat first_param = cos_pi_fraction(1, static_cast<long>(n) + 1, precision + 64);
  const BigFloat max_param = with_precision(first_param * first_param, precision);
  const BigFloat rel = exp2i(-static_cast<long>(precision / 2), precision);
  for (std::size_t k = 0; k < pf.terms.size(); ++k) {
    const auto& t = pf.terms[k];
    ++r.samples;
    if (t.pole_param > max_param) {
      r.status = CheckStatus::Fail;
      r.note = "pole parameter " + std::to_string(k + 1) + " exceeds cos^2(pi/(n+1))";
    }
    BigFloat x = BigFloat(1L, precision) / t.pole_param;
    BigFloat scale(precision);
    BigFloat xp(1L, precision);
    for (const auto& c : den) {
      scale += abs(c) * xp;
      xp *= x;
    }
    BigFloat value = abs(horner<BigFloat>(den, x, zero));
    if (value > rel * scale) {
      r.status = CheckStatus::Fail;
      r.note = "denominator does not vanish at pole " + std::to_string(k + 1);
    }
  }
  return r;
}

CheckResult check_tail_sum(unsigned n, std::size_t max_index, const Rational& tolerance) {
  CheckResult r = make_result("tail-sum", "n=" + std::to_string(n) + ",M=" + std::to_string(max_index));
  if (max_index <= n) throw Error(Errc::InvalidArgument, "tail-sum cutoff M must exceed n");
  const Rational target = tail_sum_identity(n);
  const auto series = taylor_coefficients(iterate(IterationScheme::v_step(), n), max_index);
  Rational partial(0);
  for (std::size_t m = n + 1; m <= max_index; ++m) {
    Rational next = partial - series[m];
    ++r.samples;
    if (next < partial) {
      r.status = CheckStatus::Fail;
      r.note = "partial sums decrease at m=" + std::to_string(m);
    }
    partial = std::move(next);
    if (partial > target) {
      r.status = CheckStatus::Fail;
      r.note = "partial sum exceeds the identity value at m=" + std::to_string(m);
    }
  }
  const Rational gap = target - partial;
  const BigFloat gap_f(gap, 64);
  r.worst_case = {"M=" + std::to_string(max_index), "gap " + to_string(gap_f, 12),
                  "tolerance " + to_string(BigFloat(tolerance, 64), 6)};
  if (gap > tolerance) {
    r.status = CheckStatus::Fail;
    if (r.note.empty()) r.note = "partial sum not within tolerance of " + to_string(target);
  }
  return r;
}

std::size_t adaptive_tail_cutoff(unsigned n, unsigned precision) {
  auto radius = radius_of_convergence(n, 64);
  if (!radius) return n + 1;
  double log2r = log2(*radius).to_double();
  return n + static_cast<std::size_t>(std::ceil((precision / 2.0) / log2r));
}

CheckResult check_mu_bound(unsigned n_max, unsigned precision) {
  CheckResult r = make_result("mu-bound", "n_max=" + std::to_string(n_max));
  const BigFloat pi_v = pi(precision);
  BigFloat mu(1L, precision);
  WorstTracker worst;
  for (unsigned n = 1; n <= n_max; ++n) {
    // mu_n = mu_{n-1} (2n - 1) / (2n)
    mu = mu * BigFloat(2L * n - 1, precision) / BigFloat(2L * n, precision);
    BigFloat bound = BigFloat(1L, precision) / sqrt(pi_v * BigFloat(static_cast<long>(n), precision));
    worst.offer(mu, bound, "n=" + std::to_string(n));
    ++r.samples;
    if (mu > bound) r.status = CheckStatus::Fail;
  }
  r.worst_case = worst.worst;
  return r;
}

CheckResult check_monotone_improvement(unsigned n, const DiskGrid& grid, unsigned precision) {
  CheckResult r = make_result("monotone", "n=" + std::to_string(n));
  const auto seq = v_sequence(n + 1);
  const FloatRationalFunction f0 = to_float(seq[n], precision + horner_guard_bits(seq[n]));
  const FloatRationalFunction f1 = to_float(seq[n + 1], precision + horner_guard_bits(seq[n + 1]));
  const BigFloat eps = slack(precision);
  const BigFloat inner(Rational(9, 10), precision);
  std::size_t boundary_warnings = 0;
  WorstTracker worst;
  for (const auto& z : grid.points) {
    Complex s = sqrt_principal(z);
    BigFloat e0 = abs(f0(z) - s);
    BigFloat e1 = abs(f1(z) - s);
    ++r.samples;
    if (abs(z) <= inner) {
      worst.offer(e1, e0, describe(z));
      if (e1 > e0 + eps) r.status = CheckStatus::Fail;
    } else if (e1 > e0 + eps) {
      ++boundary_warnings;
    }
  }
  r.worst_case = worst.worst;
  if (boundary_warnings != 0)
    r.note = "warning: " + std::to_string(boundary_warnings) + " points with |z| > 0.9 did not improve";
  return r;
}

bool guo_pattern_proved(const IterationScheme& scheme, unsigned k) {
  if (scheme.p != 2) return false;
  if (scheme.kind == IterationScheme::Kind::Newton) return k >= 2;
  if (scheme.kind == IterationScheme::Kind::Halley) return k >= 1;
  return false;
}

GuoReport guo_explore(const IterationScheme& scheme, unsigned k, std::size_t max_index, const IterationCaps& caps) {
  if (scheme.kind == IterationScheme::Kind::VStep)
    throw Error(Errc::InvalidArgument, "the explorer runs Newton or Halley iterates");
  if (scheme.p < 2) throw Error(Errc::BadRootOrder, "root order p must be >= 2");
  if (k < 1 || max_index < 1) throw Error(Errc::InvalidArgument, "explorer needs k >= 1 and M >= 1");
  if (max_index > caps.max_coeff_index)
    throw Error(Errc::CapExceeded, "coefficient index " + std::to_string(max_index) + " exceeds cap " +
                                       std::to_string(caps.max_coeff_index));

  GuoReport rep;
  rep.p = scheme.p;
  rep.scheme = scheme;
  rep.k = k;
  rep.max_index = max_index;
  unsigned long claimed = 1;
  for (unsigned i = 0; i < k; ++i) claimed *= scheme.kind == IterationScheme::Kind::Newton ? 2 : 3;
  rep.claimed_head_length = claimed;

  const auto series = taylor_coefficients(iterate(scheme, k, caps), max_index);
  const auto reference = proot_series(scheme.p, max_index);
  rep.coeffs_checked = series.size();
  rep.head_agreement_length = series.size();
  for (std::size_t m = 0; m < series.size(); ++m) {
    if (series[m] != reference[m]) {
      rep.head_agreement_length = m;
      break;
    }
  }
  for (std::size_t m = 1; m < series.size(); ++m) {
    const int s = sign(series[m]);
    if (s < 0) {
      ++rep.negative_count;
    } else {
      s == 0 ? ++rep.zero_count : ++rep.positive_count;
      if (!rep.first_sign_violation) rep.first_sign_violation = m;
    }
  }
  return rep;
}

CheckResult check_guo_p2(const IterationScheme& scheme, unsigned k, std::size_t max_index) {
  CheckResult r = make_result("guo-p2", "scheme=" + scheme.name() + ",k=" + std::to_string(k) + ",M=" + std::to_string(max_index));
  if (scheme.p != 2) throw Error(Errc::BadRootOrder, "guo-p2 asserts the proved case p = 2 only");
  IterationCaps caps;
  caps.max_coeff_index = std::max<unsigned>(caps.max_coeff_index, static_cast<unsigned>(max_index));
  const GuoReport rep = guo_explore(scheme, k, max_index, caps);
  r.samples = rep.coeffs_checked;
  const std::size_t expected_head = std::min<std::size_t>(rep.claimed_head_length, max_index + 1);
  r.worst_case = {"head", std::to_string(rep.head_agreement_length), ">=" + std::to_string(expected_head)};
  if (rep.head_agreement_length < expected_head) r.status = CheckStatus::Fail;
  if (rep.first_sign_violation) {
    if (guo_pattern_proved(scheme, k)) {
      r.status = CheckStatus::Fail;
      r.note = "non-negative coefficient at m=" + std::to_string(*rep.first_sign_violation);
    } else {
      r.note = "polynomial iterate: zero tail from m=" + std::to_string(*rep.first_sign_violation);
    }
  }
  return r;
}

namespace {

using Job = std::function<CheckResult()>;

std::vector<std::pair<std::string, std::vector<Job>>> plan(const SuiteOptions& o) {
  const unsigned N = o.n_max;
  const unsigned prec = o.precision;
  std::vector<std::pair<std::string, std::vector<Job>>> groups;
  auto add = [&groups](std::string name) -> std::vector<Job>& {
    groups.emplace_back(std::move(name), std::vector<Job>{});
    return groups.back().second;
  };
  const auto grid = std::make_shared<DiskGrid>(make_disk_grid(BigFloat(1L, prec), o.radial_steps, o.angular_steps));

  auto& coeff = add("coeff-formula");
  for (unsigned n = 2; n <= std::min(N, 32u); ++n)
    coeff.push_back([=] { return check_coeff_formula(n, 4 * n, prec); });

  auto& disk = add("disk-bound");
  for (unsigned n = 2; n <= N; ++n)
    disk.push_back([=] { return check_disk_bound(IterationScheme::v_step(), n, *grid, prec); });
  for (unsigned k = 2; k <= 4; ++k)
    disk.push_back([=] { return check_disk_bound(IterationScheme::newton(2), k, *grid, prec); });
  for (unsigned k = 1; k <= 3; ++k)
    disk.push_back([=] { return check_disk_bound(IterationScheme::halley(2), k, *grid, prec); });

  auto& guo = add("guo-p2");
  for (unsigned k = 2; k <= 4; ++k) guo.push_back([=] { return check_guo_p2(IterationScheme::newton(2), k, 256); });
  for (unsigned k = 1; k <= 3; ++k) guo.push_back([=] { return check_guo_p2(IterationScheme::halley(2), k, 256); });

  auto& head = add("head");
  for (unsigned n = 1; n <= N; ++n) head.push_back([=] { return check_head(n); });

  auto& mono = add("monotone");
  for (unsigned n = 1; n < N; ++n) mono.push_back([=] { return check_monotone_improvement(n, *grid, prec); });

  add("mu-bound").push_back([=] { return check_mu_bound(10000, prec); });

  auto& pole = add("pole-consistency");
  const BigFloat threshold = exp2i(-200, prec);
  for (unsigned n = 2; n <= N; ++n)
    pole.push_back([=] { return check_pole_consistency(n, 2 * prec, BigFloat(threshold)); });

  auto& ratio = add("ratio-identity");
  for (unsigned n = 0; n <= N; ++n) ratio.push_back([=] { return check_ratio_identity(n, default_ratio_samples(), prec); });

  auto& resum = add("resummation");
  for (unsigned n = 2; n <= N; ++n) resum.push_back([=] { return check_resummation(n, resummation_points(), prec); });

  auto& structural = add("structural");
  for (unsigned k = 1; k <= 4; ++k) structural.push_back([=] { return check_structural_identity(IterationScheme::newton(2), k); });
  for (unsigned k = 1; k <= 3; ++k) structural.push_back([=] { return check_structural_identity(IterationScheme::halley(2), k); });

  auto& tails = add("tail-signs");
  for (unsigned n = 1; n <= N; ++n) tails.push_back([=] { return check_tail_signs(n, std::max(4u * n, 64u)); });

  auto& tsum = add("tail-sum");
  const Rational tol = make_rational(1, Integer(1) << (prec / 4));
  for (unsigned n = 1; n <= N; ++n)
    tsum.push_back([=] { return check_tail_sum(n, adaptive_tail_cutoff(n, prec), tol); });

  auto& uni = add("uniform-compact");
  for (const Rational& rad : {Rational(1, 2), Rational(9, 10)})
    uni.push_back([=] { return check_uniform_compact(N, BigFloat(rad, prec), o.radial_steps, o.angular_steps); });

  auto& one = add("value-at-one");
  for (unsigned n = 0; n <= std::max(N, 100u); ++n) one.push_back([=] { return check_value_at_one(n); });

  return groups;
}

}  // namespace

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names = {
      "coeff-formula", "disk-bound",  "guo-p2",     "head",     "monotone",        "mu-bound",
      "pole-consistency", "ratio-identity", "resummation", "structural", "tail-signs", "tail-sum",
      "uniform-compact", "value-at-one"};
  return names;
}

std::vector<CheckResult> run_suite(const SuiteOptions& options, const std::vector<std::string>& names) {
  for (const auto& n : names)
    if (std::find(suite_check_names().begin(), suite_check_names().end(), n) == suite_check_names().end())
      throw Error(Errc::InvalidArgument, "unknown check '" + n + "'");

  std::vector<Job> jobs;
  for (auto& [name, group] : plan(options)) {
    if (!names.empty() && std::find(names.begin(), names.end(), name) == names.end()) continue;
    for (auto& j : group) jobs.push_back(std::move(j));
  }

  std::vector<std::optional<CheckResult>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<CheckResult> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

}  // namespace chebsqrt
