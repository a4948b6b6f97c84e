// Acceptance gate. Each criterion prints exactly one PASS/FAIL line; failing
// sub-checks are listed underneath it. Exit status is 0 only if all selected
// criteria pass.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chebsqrt/closed_form.hpp"
#include "chebsqrt/errors.hpp"
#include "chebsqrt/iterates.hpp"
#include "chebsqrt/rational.hpp"
#include "chebsqrt/series.hpp"
#include "chebsqrt/verify.hpp"
#include "oracles.hpp"

using namespace chebsqrt;

namespace {

constexpr unsigned kPrec = 256;

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  void absorb(const CheckResult& r) {
    require(r.passed(), r.name + " " + r.params + ": observed " + r.worst_case.observed + " bound " +
                            r.worst_case.bound + " at " + r.worst_case.input +
                            (r.note.empty() ? "" : " (" + r.note + ")"));
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0: none
  std::function<Outcome()> run;
};

Outcome structural_identity() {
  Outcome o;
  for (unsigned k = 1; k <= 4; ++k) o.absorb(check_structural_identity(IterationScheme::newton(2), k));
  for (unsigned k = 1; k <= 3; ++k) o.absorb(check_structural_identity(IterationScheme::halley(2), k));
  o.summary = "Newton k=1..4, Halley k=1..3, exact";
  return o;
}

Outcome resummation() {
  Outcome o;
  const auto points = resummation_points();
  o.require(points.size() == 32, "expected 32 sample points");
  for (unsigned n = 2; n <= 64; ++n) o.absorb(check_resummation(n, points, kPrec));
  o.summary = "n=2..64, 32 points, tol 2^-240";
  return o;
}

Outcome coefficient_formula() {
  Outcome o;
  for (unsigned n = 2; n <= 32; ++n) o.absorb(check_coeff_formula(n, 4 * n, kPrec));
  o.summary = "n=2..32, m=1..4n, tol 2^-240, all negative";
  return o;
}

Outcome head_agreement() {
  Outcome o;
  for (unsigned n = 0; n <= 64; ++n) {
    o.absorb(check_head(n));
    // Independent: truncated-series iteration against the binomial product.
    const auto series = oracle::v_series(n, n);
    for (unsigned m = 0; m <= n; ++m)
      o.require(series[m] == oracle::binomial_root_coeff(2, m),
                "oracle head mismatch n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  std::ostringstream heads;
  for (unsigned k = 1; k <= 4; ++k) {
    GuoReport r = guo_explore(IterationScheme::newton(2), k, 300);
    o.require(r.head_agreement_length >= (1UL << k),
              "Newton k=" + std::to_string(k) + " head " + std::to_string(r.head_agreement_length));
    heads << " F" << k << ":" << r.head_agreement_length;
  }
  for (unsigned k = 1; k <= 3; ++k) {
    GuoReport r = guo_explore(IterationScheme::halley(2), k, 300);
    unsigned long need = 1;
    for (unsigned i = 0; i < k; ++i) need *= 3;
    o.require(r.head_agreement_length >= need,
              "Halley k=" + std::to_string(k) + " head " + std::to_string(r.head_agreement_length));
    heads << " G" << k << ":" << r.head_agreement_length;
  }
  o.summary = "V_n n<=64 exact; M=300 heads" + heads.str();
  return o;
}

Outcome tail_sum() {
  Outcome o;
  const Rational tol = make_rational(1, 1000000);
  std::ostringstream gaps;
  for (unsigned n = 1; n <= 16; ++n) {
    CheckResult r = check_tail_sum(n, n + 200, tol);
    o.absorb(r);
    if (r.failed()) gaps << " n=" << n << ":" << r.worst_case.observed;
  }
  // Spot value at n = 2: the identity is 1/24 and the tail coefficients are -2/4^m.
  o.require(tail_sum_identity(2) == make_rational(1, 24), "tail identity at n=2 is not 1/24");
  Rational partial = 0;
  Rational pow4 = 16;
  for (unsigned m = 3; m <= 202; ++m) {
    pow4 *= 4;
    partial += Rational(2) / pow4;
  }
  const Rational gap = make_rational(1, 24) - partial;
  o.require(gap > 0 && gap <= tol, "n=2 spot sum not within 1e-6 below 1/24");
  const auto closed = coeff_report_exact(2, 10);
  for (std::size_t m = 3; m <= 10; ++m) {
    Rational expected = make_rational(-2, 1) / (Rational(Integer(1) << (2 * m)));
    o.require(std::get<Rational>(closed.coeffs[m].value) == expected,
              "n=2 coefficient m=" + std::to_string(m) + " is not -2/4^m");
  }
  o.summary = "n=1..16, M=n+200, tol 1e-6; n=2 spot 1/24";
  if (!gaps.str().empty()) o.summary += "; gap exceeds tol at" + gaps.str();
  return o;
}

Outcome value_at_one() {
  Outcome o;
  const auto seq = v_sequence(100);
  for (unsigned n = 0; n <= 100; ++n) {
    const Rational expected = make_rational(1, n + 1);
    o.require(ratfun_eval(seq[n], Rational(1)) == expected, "V_" + std::to_string(n) + "(1) != 1/(n+1)");
    o.require(oracle::v_at_one(n) == expected, "oracle V_" + std::to_string(n) + "(1) != 1/(n+1)");
  }
  o.summary = "n=0..100, exact";
  return o;
}

Outcome disk_bound() {
  Outcome o;
  const DiskGrid grid = make_disk_grid(BigFloat(1L, kPrec), 16, 32);
  for (unsigned n = 2; n <= 32; ++n) o.absorb(check_disk_bound(IterationScheme::v_step(), n, grid, kPrec));
  for (unsigned k = 2; k <= 4; ++k) o.absorb(check_disk_bound(IterationScheme::newton(2), k, grid, kPrec));
  for (unsigned k = 1; k <= 3; ++k) o.absorb(check_disk_bound(IterationScheme::halley(2), k, grid, kPrec));
  o.summary = "16x32 grid on |z|<=1, V n=2..32, F k=2..4, G k=1..3, slack 2^-240";
  return o;
}

Outcome radius() {
  Outcome o;
  // Evaluated at twice the working precision: the monic denominator has
  // coefficients far above 1, so its cancellation at the pole needs headroom.
  const unsigned prec = 2 * kPrec;
  const BigFloat threshold = exp2i(-200, prec);
  for (unsigned n = 2; n <= 64; ++n) o.absorb(check_pole_consistency(n, prec, threshold));
  o.summary = "n=2..64, |den(sec^2)| < 2^-200, pole params <= cos^2";
  return o;
}

Outcome guo_p2() {
  Outcome o;
  for (unsigned k = 2; k <= 4; ++k) o.absorb(check_guo_p2(IterationScheme::newton(2), k, 256));
  for (unsigned k = 1; k <= 3; ++k) o.absorb(check_guo_p2(IterationScheme::halley(2), k, 256));
  o.summary = "F k=2..4, G k=1..3, m=1..256 strictly negative";
  return o;
}

std::string describe(const GuoReport& r) {
  std::ostringstream s;
  s << r.scheme.name() << " p=" << r.p << " k=" << r.k << " head=" << r.head_agreement_length << " (claimed "
    << r.claimed_head_length << ") neg/zero/pos=" << r.negative_count << "/" << r.zero_count << "/"
    << r.positive_count << " first_violation=";
  if (r.first_sign_violation)
    s << *r.first_sign_violation;
  else
    s << "none";
  return s.str();
}

Outcome explorer_p3() {
  Outcome o;
  GuoReport newton = guo_explore(IterationScheme::newton(3), 3, 64);
  GuoReport halley = guo_explore(IterationScheme::halley(3), 2, 64);
  o.require(newton.head_agreement_length >= 8, "Newton p=3 k=3 head below 8");
  o.require(halley.head_agreement_length >= 9, "Halley p=3 k=2 head below 9");
  o.summary = describe(newton) + "; " + describe(halley);
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "structural-identity", 10, structural_identity},
      {2, "resummation", 60, resummation},
      {3, "coefficient-formula", 60, coefficient_formula},
      {4, "head-agreement", 0, head_agreement},
      {5, "tail-sum", 0, tail_sum},
      {6, "value-at-one", 0, value_at_one},
      {7, "disk-bound", 120, disk_bound},
      {8, "radius-of-convergence", 0, radius},
      {9, "guo-p2-signs", 0, guo_p2},
      {10, "explorer-p3", 0, explorer_p3},
  };
  return all;
}

bool run(const Criterion& c) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.ok = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.time_limit_s > 0 && secs > c.time_limit_s) {
    o.ok = false;
    o.failures.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.time_limit_s) + " s");
  }
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  std::cout << (o.ok ? "PASS" : "FAIL") << " c" << c.id << " " << c.name << " [" << t.str() << " s] " << o.summary
            << "\n";
  for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  std::cout.flush();
  return o.ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria().size())) {
    std::cerr << "unknown criterion " << only << "\n";
    return 2;
  }
  bool all_ok = true;
  for (const auto& c : criteria())
    if (only == 0 || c.id == only) all_ok = run(c) && all_ok;
  return all_ok ? 0 : 1;
}
