#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "chebsqrt/closed_form.hpp"
#include "chebsqrt/errors.hpp"
#include "chebsqrt/iterates.hpp"
#include "chebsqrt/rational.hpp"
#include "chebsqrt/serialize.hpp"
#include "chebsqrt/series.hpp"
#include "chebsqrt/verify.hpp"

namespace chebsqrt::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Json, Csv, Human };

struct Config {
  unsigned precision = kDefaultPrecision;
  Format format = Format::Json;
  std::uint64_t seed = 20240601;
  IterationCaps caps;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<unsigned> env_unsigned(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view text(raw);
  unsigned value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw UsageError(std::string(name) + " must be a non-negative integer, got '" + raw + "'");
  return value;
}

std::string sign_char(int s) { return s < 0 ? "-" : (s > 0 ? "+" : "0"); }

IterationScheme scheme_from(const std::string& name, int p) {
  try {
    return parse_scheme(name, p);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\n";
}

// ---- coeffs -------------------------------------------------------------

struct CoeffsArgs {
  std::string scheme = "v";
  int p = 2;
  unsigned k = 0;
  std::size_t max_index = 16;
};

int cmd_coeffs(const Config& cfg, const CoeffsArgs& a, std::ostream& out) {
  const IterationScheme scheme = scheme_from(a.scheme, a.p);
  if (a.max_index > cfg.caps.max_coeff_index) throw Error(Errc::CapExceeded, "--M exceeds max_coeff_index");
  const RationalFunction f = iterate(scheme, a.k, cfg.caps);
  const PowerSeriesPrefix series = taylor_coefficients(f, a.max_index, scheme.name());
  const std::vector<Rational> ref = proot_series(scheme.p, a.max_index);

  std::size_t head = 0;
  while (head < series.size() && series[head] == ref[head]) ++head;

  struct Row {
    std::size_t m;
    std::string coeff, reference, sign, region;
  };
  std::vector<Row> rows;
  for (std::size_t m = 0; m < series.size(); ++m)
    rows.push_back({m, to_string(series[m]), to_string(ref[m]), sign_char(sign(series[m])), m < head ? "head" : "tail"});

  switch (cfg.format) {
    case Format::Csv:
      out << "m,coeff,reference,sign,region\n";
      for (const auto& r : rows) out << join_csv({std::to_string(r.m), r.coeff, r.reference, r.sign, r.region});
      break;
    case Format::Json: {
      ordered_json j;
      j["scheme"] = scheme.name();
      j["p"] = scheme.p;
      j["k"] = a.k;
      j["M"] = a.max_index;
      j["head_agreement_length"] = head;
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows)
        arr.push_back({{"m", r.m}, {"coeff", r.coeff}, {"reference", r.reference}, {"sign", r.sign}, {"region", r.region}});
      j["rows"] = std::move(arr);
      out << j.dump() << "\n";
      break;
    }
    case Format::Human:
      out << scheme.name() << " p=" << scheme.p << " k=" << a.k << ", head agreement " << head << "\n";
      out << std::setw(6) << "m" << "  " << std::setw(32) << "coeff" << "  " << std::setw(32) << "reference"
          << "  sign  region\n";
      for (const auto& r : rows)
        out << std::setw(6) << r.m << "  " << std::setw(32) << r.coeff << "  " << std::setw(32) << r.reference << "  "
            << std::setw(4) << r.sign << "  " << r.region << "\n";
      break;
  }
  return kExitOk;
}

// ---- decompose ----------------------------------------------------------

int cmd_decompose(const Config& cfg, unsigned n, std::ostream& out) {
  if (n < 1) throw UsageError("decompose needs --n >= 1");
  const PartialFractionForm pf = decompose(n, cfg.precision);
  const auto radius = radius_of_convergence(n, cfg.precision);
  const std::string radius_text = radius ? to_string(*radius) : "inf";
  const std::string tail = to_string(tail_sum_identity(n));

  switch (cfg.format) {
    case Format::Json: {
      ordered_json j = ordered_json::parse(partial_fraction_to_json(pf));
      j["radius"] = radius_text;
      j["tail_sum"] = tail;
      out << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << "n,k,weight,pole_param,scale,radius,tail_sum\n";
      if (pf.terms.empty()) out << join_csv({std::to_string(n), "", "", "", to_string(pf.scale), radius_text, tail});
      for (std::size_t k = 0; k < pf.terms.size(); ++k)
        out << join_csv({std::to_string(n), std::to_string(k + 1), to_string(pf.terms[k].weight),
                         to_string(pf.terms[k].pole_param), to_string(pf.scale), radius_text, tail});
      break;
    case Format::Human:
      out << "V_" << n << "(z) = 1 - z/2";
      if (!pf.terms.empty()) out << " - " << to_string(pf.scale) << " z^2 sum_k w_k / (1 - c_k z)";
      out << "\n";
      for (std::size_t k = 0; k < pf.terms.size(); ++k)
        out << "  k=" << k + 1 << "  w=" << to_string(pf.terms[k].weight, 30)
            << "  c=" << to_string(pf.terms[k].pole_param, 30) << "\n";
      out << "radius of convergence: " << (radius ? to_string(*radius, 30) : "inf") << "\n";
      out << "tail sum identity: " << tail << "\n";
      break;
  }
  return kExitOk;
}

// ---- eval ---------------------------------------------------------------

struct EvalArgs {
  std::string scheme = "v";
  int p = 2;
  unsigned k = 2;
  std::string re = "0";
  std::string im = "0";
};

int cmd_eval(const Config& cfg, const EvalArgs& a, std::ostream& out) {
  const IterationScheme scheme = scheme_from(a.scheme, a.p);
  ComplexRational z;
  try {
    z = {parse_rational(a.re), parse_rational(a.im)};
  } catch (const Error& e) {
    throw UsageError(std::string("bad point: ") + e.what());
  }
  const RationalFunction f = iterate(scheme, a.k, cfg.caps);
  const ComplexRational exact = f(z);
  const Complex zf(z, cfg.precision);
  const Complex value(exact, cfg.precision);

  ordered_json j;
  j["scheme"] = scheme.name();
  j["p"] = scheme.p;
  j["k"] = a.k;
  j["z"] = {to_string(z.re), to_string(z.im)};
  j["exact"] = {to_string(exact.re), to_string(exact.im)};
  j["value"] = {to_string(value.re), to_string(value.im)};

  std::optional<std::string> error, bound;
  if (scheme.p == 2 && !(z.im == 0 && z.re > 1)) {
    const Complex s = sqrt_principal(zf);
    const BigFloat err = abs(value - s);
    error = to_string(err);
    const unsigned long n = scheme.kind == IterationScheme::Kind::VStep ? a.k : equivalent_v_index(scheme, a.k);
    if (n >= 1) {
      const BigFloat c = BigFloat(2L, cfg.precision) / sqrt(pi(cfg.precision) * BigFloat(static_cast<long>(n), cfg.precision));
      bound = to_string(c * pow(abs(zf), n + 1));
    }
  }
  j["error"] = error ? ordered_json(*error) : ordered_json(nullptr);
  j["bound"] = bound ? ordered_json(*bound) : ordered_json(nullptr);

  switch (cfg.format) {
    case Format::Json:
      out << j.dump() << "\n";
      break;
    case Format::Csv:
      out << "scheme,p,k,z_re,z_im,exact_re,exact_im,value_re,value_im,error,bound\n";
      out << join_csv({scheme.name(), std::to_string(scheme.p), std::to_string(a.k), to_string(z.re), to_string(z.im),
                       to_string(exact.re), to_string(exact.im), to_string(value.re), to_string(value.im),
                       error.value_or(""), bound.value_or("")});
      break;
    case Format::Human:
      out << scheme.name() << " p=" << scheme.p << " k=" << a.k << " at z = " << to_string(z.re) << " + "
          << to_string(z.im) << "i\n";
      out << "  exact: " << to_string(exact.re) << " + " << to_string(exact.im) << "i\n";
      out << "  value: " << to_string(value.re, 40) << " + " << to_string(value.im, 40) << "i\n";
      if (error) out << "  |f - sqrt(1-z)|: " << *error << "\n";
      if (bound) out << "  bound: " << *bound << "\n";
      break;
  }
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> checks;
  std::optional<unsigned> n;
  unsigned n_max = 16;
  std::string scheme = "v";
  std::optional<unsigned> k;
  int p = 2;
  unsigned radial = 16;
  unsigned angular = 32;
  std::optional<std::size_t> max_index;
  std::string radius = "9/10";
  unsigned threads = 0;
};

CheckResult run_single(const Config& cfg, const VerifyArgs& a, const std::string& name, unsigned idx) {
  const unsigned prec = cfg.precision;
  auto grid = [&] { return make_disk_grid(BigFloat(1L, prec), a.radial, a.angular); };
  auto scheme = [&] {
    const IterationScheme s = scheme_from(a.scheme, a.p);
    return s;
  };
  if (name == "head") return check_head(idx);
  if (name == "tail-signs") return check_tail_signs(idx, a.max_index.value_or(4 * idx + 4));
  if (name == "disk-bound") return check_disk_bound(scheme(), idx, grid(), prec);
  if (name == "uniform-compact")
    return check_uniform_compact(idx, BigFloat(parse_rational(a.radius), prec), a.radial, a.angular);
  if (name == "ratio-identity") return check_ratio_identity(idx, default_ratio_samples(), prec);
  if (name == "structural") return check_structural_identity(scheme(), idx);
  if (name == "value-at-one") return check_value_at_one(idx);
  if (name == "resummation") return check_resummation(idx, resummation_points(), prec);
  if (name == "coeff-formula") return check_coeff_formula(idx, a.max_index.value_or(4 * idx), prec);
  if (name == "pole-consistency") return check_pole_consistency(idx, 2 * prec, exp2i(-200, 2 * prec));
  if (name == "tail-sum")
    return check_tail_sum(idx, a.max_index.value_or(adaptive_tail_cutoff(idx, prec)),
                          make_rational(1, Integer(1) << (prec / 4)));
  if (name == "mu-bound") return check_mu_bound(idx, prec);
  if (name == "monotone") return check_monotone_improvement(idx, grid(), prec);
  if (name == "guo-p2") return check_guo_p2(scheme(), idx, a.max_index.value_or(256));
  throw UsageError("unknown check '" + name + "'");
}

void emit_result(const Config& cfg, const CheckResult& r, std::ostream& out) {
  if (cfg.format == Format::Human) {
    out << (r.passed() ? "PASS" : (r.failed() ? "FAIL" : "SKIP")) << "  " << r.name << " " << r.params;
    if (!r.worst_case.observed.empty())
      out << "  worst " << r.worst_case.observed << " vs " << r.worst_case.bound << " at " << r.worst_case.input;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  } else {
    out << check_result_to_json(r) << "\n";
  }
}

int cmd_verify(const Config& cfg, const VerifyArgs& a, std::ostream& out) {
  if (!a.all && a.checks.empty()) throw UsageError("verify needs --all or --check NAME");
  if (a.all && !a.checks.empty()) throw UsageError("--all and --check are exclusive");
  const auto& known = suite_check_names();
  for (const auto& c : a.checks)
    if (std::find(known.begin(), known.end(), c) == known.end()) throw UsageError("unknown check '" + c + "'");

  std::vector<CheckResult> results;
  const std::optional<unsigned> idx = a.n ? a.n : a.k;
  if (idx) {
    std::vector<std::string> names = a.all ? known : a.checks;
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    for (const auto& name : names) results.push_back(run_single(cfg, a, name, *idx));
  } else {
    SuiteOptions opts;
    opts.n_max = a.n_max;
    opts.precision = cfg.precision;
    opts.radial_steps = a.radial;
    opts.angular_steps = a.angular;
    opts.threads = a.threads;
    results = run_suite(opts, a.checks);
  }
  bool failed = false;
  for (const auto& r : results) {
    emit_result(cfg, r, out);
    failed = failed || r.failed();
  }
  return failed ? kExitCheckFailed : kExitOk;
}

// ---- explore-guo --------------------------------------------------------

struct GuoArgs {
  int p = 3;
  std::string scheme = "newton";
  unsigned k = 1;
  std::size_t max_index = 64;
};

int cmd_explore_guo(const Config& cfg, const GuoArgs& a, std::ostream& out) {
  if (a.p < 2) throw UsageError("explore-guo needs --p >= 2");
  if (a.scheme != "newton" && a.scheme != "halley") throw UsageError("explore-guo needs --scheme newton|halley");
  if (a.k < 1 || a.max_index < 1) throw UsageError("explore-guo needs --k >= 1 and --M >= 1");
  const IterationScheme scheme = scheme_from(a.scheme, a.p);
  const GuoReport r = guo_explore(scheme, a.k, a.max_index, cfg.caps);
  // At p = 2 a violation contradicts a proved statement only in the proved range;
  // Newton k = 1 is the polynomial 1 - z/2 and is reported like p >= 3.
  const bool asserted = a.p == 2 && guo_pattern_proved(scheme, a.k);
  const bool violated = asserted && (r.first_sign_violation.has_value() || r.head_agreement_length < r.claimed_head_length);

  switch (cfg.format) {
    case Format::Json: {
      ordered_json j = ordered_json::parse(guo_report_to_json(r));
      j["asserted"] = asserted;
      out << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << "p,scheme,k,M,coeffs_checked,head_agreement_length,claimed_head_length,first_sign_violation,negative,"
             "zero,positive,asserted\n";
      out << join_csv({std::to_string(r.p), r.scheme.name(), std::to_string(r.k), std::to_string(r.max_index),
                       std::to_string(r.coeffs_checked), std::to_string(r.head_agreement_length),
                       std::to_string(r.claimed_head_length),
                       r.first_sign_violation ? std::to_string(*r.first_sign_violation) : "",
                       std::to_string(r.negative_count), std::to_string(r.zero_count),
                       std::to_string(r.positive_count), asserted ? "true" : "false"});
      break;
    case Format::Human:
      out << r.scheme.name() << " p=" << r.p << " k=" << r.k << " M=" << r.max_index << "\n";
      out << "  head agreement " << r.head_agreement_length << " (claimed " << r.claimed_head_length << ")\n";
      out << "  signs of m=1..M: " << r.negative_count << " negative, " << r.zero_count << " zero, " << r.positive_count
          << " positive\n";
      out << "  first sign violation: "
          << (r.first_sign_violation ? std::to_string(*r.first_sign_violation) : std::string("none")) << "\n";
      out << "  " << (asserted ? "asserted (proved case)" : "report only") << "\n";
      break;
  }
  return violated ? kExitCheckFailed : kExitOk;
}

// ---- bench --------------------------------------------------------------

struct BenchArgs {
  unsigned n = 32;
  std::size_t points = 1000;
  unsigned reps = 1;
};

// Uniform in the closed unit disk, coordinates with denominator 2^20.
std::vector<ComplexRational> disk_samples(std::size_t count, std::uint64_t seed) {
  constexpr long kDen = 1L << 20;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-kDen, kDen);
  std::vector<ComplexRational> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    const long x = coord(rng), y = coord(rng);
    if (x * x + y * y > kDen * kDen) continue;
    pts.push_back({make_rational(x, kDen), make_rational(y, kDen)});
  }
  return pts;
}

int cmd_bench(const Config& cfg, const BenchArgs& a, std::ostream& out) {
  if (a.n < 2) throw UsageError("bench needs --n >= 2");
  if (a.points < 1 || a.reps < 1) throw UsageError("bench needs --points >= 1 and --reps >= 1");
  const unsigned prec = cfg.precision;
  const auto pts = disk_samples(a.points, cfg.seed);
  const RationalFunction f = iterate(IterationScheme::v_step(), a.n, cfg.caps);
  const FloatRationalFunction ff = to_float(f, prec + horner_guard_bits(f));
  const PartialFractionForm pf = decompose(a.n, prec);
  const BigFloat tol = exp2i(-(static_cast<long>(prec) - 16), prec);

  std::vector<Complex> reference;
  reference.reserve(pts.size());
  using clock = std::chrono::steady_clock;

  struct Row {
    std::string strategy;
    double seconds;
    BigFloat max_dev;
  };
  std::vector<Row> rows;

  auto t0 = clock::now();
  for (unsigned rep = 0; rep < a.reps; ++rep) {
    reference.clear();
    for (const auto& z : pts) {
      const std::span<const Rational> num(f.num().coeffs()), den(f.den().coeffs());
      const ComplexRational zero{Rational(0), Rational(0)};
      std::vector<ComplexRational> nc, dc;
      for (const auto& c : num) nc.push_back({c, Rational(0)});
      for (const auto& c : den) dc.push_back({c, Rational(0)});
      const ComplexRational v = horner<ComplexRational>(nc, z, zero) / horner<ComplexRational>(dc, z, zero);
      reference.emplace_back(v, prec);
    }
  }
  rows.push_back({"exact-rational-horner", std::chrono::duration<double>(clock::now() - t0).count(), BigFloat(prec)});

  auto timed = [&](const std::string& name, auto&& eval) {
    BigFloat worst(prec);
    const auto start = clock::now();
    for (unsigned rep = 0; rep < a.reps; ++rep)
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Complex v = eval(Complex(pts[i], prec));
        if (rep == 0) worst = max(worst, abs(v - reference[i]));
      }
    rows.push_back({name, std::chrono::duration<double>(clock::now() - start).count(), worst});
  };
  timed("bigfloat-horner", [&](const Complex& z) { return ff(z); });
  timed("partial-fraction", [&](const Complex& z) { return pf_eval(pf, z); });

  bool ok = true;
  for (const auto& r : rows) ok = ok && r.max_dev <= tol;

  switch (cfg.format) {
    case Format::Json: {
      ordered_json j;
      j["n"] = a.n;
      j["points"] = a.points;
      j["reps"] = a.reps;
      j["seed"] = cfg.seed;
      j["precision_bits"] = prec;
      j["tolerance"] = to_string(tol);
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows)
        arr.push_back({{"strategy", r.strategy}, {"seconds", r.seconds}, {"max_deviation", to_string(r.max_dev)}});
      j["rows"] = std::move(arr);
      j["within_tolerance"] = ok;
      out << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << "strategy,seconds,max_deviation,n,points,reps,seed,precision_bits\n";
      for (const auto& r : rows)
        out << join_csv({r.strategy, std::to_string(r.seconds), to_string(r.max_dev), std::to_string(a.n),
                         std::to_string(a.points), std::to_string(a.reps), std::to_string(cfg.seed),
                         std::to_string(prec)});
      break;
    case Format::Human:
      out << "V_" << a.n << " at " << a.points << " disk points x " << a.reps << " reps, seed " << cfg.seed << ", "
          << prec << " bits\n";
      for (const auto& r : rows)
        out << "  " << std::left << std::setw(24) << r.strategy << std::right << std::setw(12) << std::fixed
            << std::setprecision(6) << r.seconds << " s   max deviation " << to_string(r.max_dev, 6) << "\n";
      out << (ok ? "agreement within " : "DISAGREEMENT beyond ") << to_string(tol, 6) << "\n";
      break;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational approximants of sqrt(1 - z): coefficients, partial fractions and checks", "chebsqrt"};
  app.require_subcommand(1);
  app.fallthrough();

  // PREC_BITS and MAX_K replace the built-in defaults; explicit flags win.
  Config cfg;
  unsigned max_k = cfg.caps.max_newton_k;
  try {
    if (auto v = env_unsigned("PREC_BITS")) cfg.precision = *v;
    if (auto v = env_unsigned("MAX_K")) max_k = *v;
  } catch (const UsageError& e) {
    err << "chebsqrt: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string format = "json";
  app.add_option("--prec", cfg.precision, "Working precision in bits")
      ->check(CLI::Range(kMinPrecision, 1U << 20));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--seed", cfg.seed, "Seed for random samples");
  app.add_option("--max-k", max_k, "Cap on Newton/Halley k")->check(CLI::Range(1U, 64U));
  app.add_option("--max-v-steps", cfg.caps.max_v_steps, "Cap on V_n index")->check(CLI::PositiveNumber);
  app.add_option("--max-coeff-index", cfg.caps.max_coeff_index, "Cap on series length")->check(CLI::PositiveNumber);

  CoeffsArgs coeffs;
  auto* c_coeffs = app.add_subcommand("coeffs", "Exact Taylor coefficients of an iterate");
  c_coeffs->add_option("--scheme", coeffs.scheme, "v, newton or halley");
  c_coeffs->add_option("--p", coeffs.p, "Root order");
  c_coeffs->add_option("--k", coeffs.k, "Iteration count (n for v)");
  c_coeffs->add_option("--M", coeffs.max_index, "Last coefficient index");

  unsigned decompose_n = 2;
  auto* c_decompose = app.add_subcommand("decompose", "Partial-fraction form of V_n");
  c_decompose->add_option("--n", decompose_n, "Index n >= 1");

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "Evaluate an iterate at a Gaussian-rational point");
  c_eval->add_option("--scheme", eval.scheme, "v, newton or halley");
  c_eval->add_option("--p", eval.p, "Root order");
  c_eval->add_option("--k", eval.k, "Iteration count (n for v)");
  c_eval->add_option("--re", eval.re, "Real part, p/q or decimal");
  c_eval->add_option("--im", eval.im, "Imaginary part, p/q or decimal");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run checks, one JSON line per result");
  c_verify->add_flag("--all", verify.all, "Run every check");
  c_verify->add_option("--check", verify.checks, "Check name (repeatable)");
  c_verify->add_option("--n", verify.n, "Single index instead of a sweep");
  c_verify->add_option("--n-max", verify.n_max, "Sweep upper index")->check(CLI::PositiveNumber);
  c_verify->add_option("--scheme", verify.scheme, "Scheme for scheme-dependent checks");
  c_verify->add_option("--k", verify.k, "Iteration count for scheme-dependent checks");
  c_verify->add_option("--p", verify.p, "Root order");
  c_verify->add_option("--radial", verify.radial, "Disk grid radii")->check(CLI::PositiveNumber);
  c_verify->add_option("--angular", verify.angular, "Disk grid angles")->check(CLI::PositiveNumber);
  c_verify->add_option("--M", verify.max_index, "Coefficient cutoff");
  c_verify->add_option("--radius", verify.radius, "Compact radius for uniform-compact");
  c_verify->add_option("--threads", verify.threads, "Worker threads (0: all cores)");

  GuoArgs guo;
  auto* c_guo = app.add_subcommand("explore-guo", "Sign pattern of Newton/Halley iterates for x^p = 1 - z");
  c_guo->add_option("--p", guo.p, "Root order >= 2");
  c_guo->add_option("--scheme", guo.scheme, "newton or halley");
  c_guo->add_option("--k", guo.k, "Iteration count");
  c_guo->add_option("--M", guo.max_index, "Last coefficient index");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Compare exact, BigFloat and partial-fraction evaluation");
  c_bench->add_option("--n", bench.n, "Index n >= 2");
  c_bench->add_option("--points", bench.points, "Random disk samples");
  c_bench->add_option("--reps", bench.reps, "Repetitions");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "chebsqrt: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.precision < kMinPrecision || cfg.precision > (1U << 20)) {
    err << "chebsqrt: precision must lie in [" << kMinPrecision << ", " << (1U << 20) << "] bits\n";
    return kExitUsage;
  }
  if (max_k < 1 || max_k > 64) {
    err << "chebsqrt: max k must lie in [1, 64]\n";
    return kExitUsage;
  }
  cfg.format = format == "csv" ? Format::Csv : (format == "human" ? Format::Human : Format::Json);
  cfg.caps.max_newton_k = cfg.caps.max_halley_k = max_k;

  try {
    if (*c_coeffs) return cmd_coeffs(cfg, coeffs, out);
    if (*c_decompose) return cmd_decompose(cfg, decompose_n, out);
    if (*c_eval) return cmd_eval(cfg, eval, out);
    if (*c_verify) return cmd_verify(cfg, verify, out);
    if (*c_guo) return cmd_explore_guo(cfg, guo, out);
    if (*c_bench) return cmd_bench(cfg, bench, out);
  } catch (const UsageError& e) {
    err << "chebsqrt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "chebsqrt: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chebsqrt::cli
