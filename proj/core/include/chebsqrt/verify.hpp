#pragma once

// Executable checks of the identities, sign patterns and error bounds satisfied
// by the iterates, plus an explorer for the sign pattern at p >= 3.
//
// Tolerances scale with the working precision: a floating comparison passes
// when it holds up to slack 2^-(precision - 16). Exact checks use no tolerance.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chebsqrt/bigfloat.hpp"
#include "chebsqrt/complex.hpp"
#include "chebsqrt/iterates.hpp"

namespace chebsqrt {

/// Polar sample of a closed disk: radii radius*i/radial_steps (i = 1..radial_steps)
/// times angles 2*pi*j/angular_steps, plus the origin.
struct DiskGrid {
  BigFloat radius;
  unsigned radial_steps = 0;
  unsigned angular_steps = 0;
  std::vector<Complex> points;
};

DiskGrid make_disk_grid(const BigFloat& radius, unsigned radial_steps, unsigned angular_steps);

/// Drops points within 2^-(precision/2) of z = 1.
DiskGrid excluding_near_one(DiskGrid grid);

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct WorstCase {
  std::string input;
  std::string observed;
  std::string bound;
};

struct CheckResult {
  std::string name;
  std::string params;
  CheckStatus status = CheckStatus::Pass;
  WorstCase worst_case;
  std::size_t samples = 0;
  std::string note;

  bool passed() const noexcept { return status == CheckStatus::Pass; }
  bool failed() const noexcept { return status == CheckStatus::Fail; }
};

/// sqrt(1 - z) on the cut plane C \ [1, inf), branch with Re >= 0; z = 1 maps to 0.
/// Throws Error{OnBranchCut} for real z > 1.
Complex sqrt_principal(const Complex& z);

/// Taylor coefficients 0..n of V_n equal lambda_0..lambda_n exactly.
CheckResult check_head(unsigned n);

/// Exact coefficients n+1..max_index of V_n are strictly negative. SKIP for n <= 1.
CheckResult check_tail_signs(unsigned n, std::size_t max_index);

/// |f(z) - sqrt(1 - z)| <= C |z|^e on the grid, with (C, e) =
///   (2/sqrt(pi n), n + 1)                    for V_n,
///   (2/sqrt(pi) / sqrt(2^k - 1), 2^k)       for Newton F_k,
///   (2/sqrt(pi) / sqrt(3^k - 1), 3^k)       for Halley G_k.
/// p must be 2 for Newton/Halley (Error{BadRootOrder}); k = 0 is a SKIP.
CheckResult check_disk_bound(const IterationScheme& scheme, unsigned k, const DiskGrid& grid,
                             unsigned precision = kDefaultPrecision);

/// Sampled sup |V_n - sqrt(1-z)| over the disk of the given radius (< 1) is
/// non-increasing in n = 1..n_max and below 2 S q^(n+1) / (1 - q^(n+1)), with
/// q = sup |(1-s)/(1+s)| and S = sup |s|.
CheckResult check_uniform_compact(unsigned n_max, const BigFloat& compact_radius, unsigned radial_steps = 16,
                                  unsigned angular_steps = 32);

/// (V_n - s)/(V_n + s) = ((1 - s)/(1 + s))^(n+1), s = sqrt(1 - x), at rational x in (0, 1).
CheckResult check_ratio_identity(unsigned n, const std::vector<Rational>& samples,
                                 unsigned precision = kDefaultPrecision);

/// Default ratio-identity samples {1/10, 1/4, 1/2, 3/4, 9/10}.
std::vector<Rational> default_ratio_samples();

/// Newton/Halley iterate k at p = 2 equals V_{2^k-1} / V_{3^k-1} as normalized data.
CheckResult check_structural_identity(const IterationScheme& scheme, unsigned k);

/// V_n(1) = 1/(n+1) exactly.
CheckResult check_value_at_one(unsigned n);

/// 32 Gaussian-rational points of D(0, 0.9): radii {1/4, 1/2, 3/4, 7/8} along
/// eight directions with rational cosine and sine.
std::vector<ComplexRational> resummation_points();

/// Partial-fraction evaluation agrees with exact V_n at the given points.
CheckResult check_resummation(unsigned n, const std::vector<ComplexRational>& points,
                              unsigned precision = kDefaultPrecision);

/// Closed-form A_m^(n) matches exact coefficients for m = 1..max_index and is negative.
CheckResult check_coeff_formula(unsigned n, std::size_t max_index, unsigned precision = kDefaultPrecision);

/// The monic exact denominator of V_n evaluated at sec^2(pi/(n+1)) is below
/// `threshold` in magnitude, each 1/pole_param_k is a root to relative
/// precision, and no pole parameter exceeds cos^2(pi/(n+1)).
CheckResult check_pole_consistency(unsigned n, unsigned precision, const BigFloat& threshold);

/// Exact partial sums of -A_m^(n), m = n+1..max_index, stay below mu_n - 1/(n+1),
/// increase with the cutoff, and end within `tolerance` of that value.
CheckResult check_tail_sum(unsigned n, std::size_t max_index, const Rational& tolerance);

/// Cutoff n + ceil((precision/2) / log2(radius)) for which the tail partial sum is
/// within 2^-(precision/4) of the identity.
std::size_t adaptive_tail_cutoff(unsigned n, unsigned precision);

/// mu_n <= 1/sqrt(pi n) for n = 1..n_max.
CheckResult check_mu_bound(unsigned n_max, unsigned precision = kDefaultPrecision);

/// |V_{n+1}(z) - s| <= |V_n(z) - s| + slack for grid points with |z| <= 9/10.
/// Violations on |z| = 1 are reported in the note, not failed.
CheckResult check_monotone_improvement(unsigned n, const DiskGrid& grid, unsigned precision = kDefaultPrecision);

struct GuoReport {
  int p = 2;
  IterationScheme scheme;
  unsigned k = 0;
  std::size_t max_index = 0;
  std::size_t coeffs_checked = 0;
  /// Largest h with coefficients 0..h-1 equal to those of (1 - z)^(1/p).
  std::size_t head_agreement_length = 0;
  /// 2^k (Newton) or 3^k (Halley).
  unsigned long claimed_head_length = 0;
  /// Least m >= 1 with coefficient >= 0.
  std::optional<std::size_t> first_sign_violation;
  std::size_t negative_count = 0;
  std::size_t zero_count = 0;
  std::size_t positive_count = 0;
};

/// Exact series of the k-th Newton/Halley iterate for x^p = 1 - z up to max_index.
/// Throws Error{BadRootOrder}, Error{InvalidArgument} for the VStep scheme or
/// k, max_index < 1, and Error{CapExceeded} beyond caps.
GuoReport guo_explore(const IterationScheme& scheme, unsigned k, std::size_t max_index,
                      const IterationCaps& caps = {});

/// Whether the sign pattern of (scheme, k) at p = 2 is a proved statement:
/// Newton for k >= 2, Halley for k >= 1.
bool guo_pattern_proved(const IterationScheme& scheme, unsigned k);

/// At p = 2, asserts no sign violation and head length >= 2^k / 3^k.
CheckResult check_guo_p2(const IterationScheme& scheme, unsigned k, std::size_t max_index);

struct SuiteOptions {
  unsigned n_max = 16;
  unsigned precision = kDefaultPrecision;
  unsigned radial_steps = 16;
  unsigned angular_steps = 32;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Check names accepted by run_suite, sorted.
const std::vector<std::string>& suite_check_names();

/// Runs the named checks (all when empty) over the parameter ranges implied by
/// options. Results are ordered by check name, then by parameters in generation order.
/// Throws Error{InvalidArgument} on an unknown name.
std::vector<CheckResult> run_suite(const SuiteOptions& options, const std::vector<std::string>& names = {});

}  // namespace chebsqrt
