#pragma once

// Partial-fraction form of the linear-fraction iterates V_n and the quantities
// derived from it: explicit Taylor coefficients, radius of convergence and the
// tail-sum identity.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "chebsqrt/bigfloat.hpp"
#include "chebsqrt/complex.hpp"
#include "chebsqrt/rational.hpp"

namespace chebsqrt {

struct PoleTerm {
  BigFloat weight;      // sin^2(2 pi k / (n + 1))
  BigFloat pole_param;  // cos^2(pi k / (n + 1)); the pole sits at 1 / pole_param
};

/// V_n(z) = 1 - z/2 - scale * z^2 * sum_k weight_k / (1 - z * pole_param_k),
/// k = 1..floor(n/2), scale = 1 / (2(n + 1)).
struct PartialFractionForm {
  unsigned n = 1;
  BigFloat scale;
  std::vector<PoleTerm> terms;
  unsigned precision = kDefaultPrecision;
};

/// Throws Error{BadIndex} for n < 1.
PartialFractionForm decompose(unsigned n, unsigned precision = kDefaultPrecision);

/// Throws Error{NearPole} when z is within 2^(-precision/2) of a pole.
Complex pf_eval(const PartialFractionForm& pf, const Complex& z);
BigFloat pf_eval(const PartialFractionForm& pf, const BigFloat& x);

/// A_m^(n) = -(1/(n+1)) sum_{k=1..n} cos^(2(m-1))(k pi/(n+1)) sin^2(k pi/(n+1)), m >= 1.
/// Throws Error{BadIndex} for n < 1 or m < 1.
BigFloat coeff_closed(unsigned n, unsigned m, unsigned precision = kDefaultPrecision);

/// sec^2(pi/(n+1)) for n >= 2; nullopt (no finite radius) when V_n is a polynomial.
std::optional<BigFloat> radius_of_convergence(unsigned n, unsigned precision = kDefaultPrecision);

/// Exact limit of sum_{m>n} (-A_m^(n)) = mu_n - 1/(n+1). Throws Error{BadIndex} for n < 1.
Rational tail_sum_identity(unsigned n);

enum class CoeffSource { Recurrence, ClosedForm };

struct CoeffEntry {
  std::size_t m = 0;
  std::variant<Rational, BigFloat> value;
  CoeffSource source = CoeffSource::Recurrence;

  /// -1, 0 or +1.
  int sign() const;
};

struct SignSummary {
  bool head_match = false;
  /// Least m > n whose coefficient is >= 0, if any was seen.
  std::optional<std::size_t> first_nonnegative_tail_index;
};

struct CoeffReport {
  unsigned n = 0;
  std::vector<CoeffEntry> coeffs;
  SignSummary sign_summary;
};

/// Exact coefficients 0..max_index of V_n from the Taylor recurrence.
CoeffReport coeff_report_exact(unsigned n, std::size_t max_index);
/// Coefficients from the closed formula (entry 0 is the exact 1). head_match is
/// judged to 2^-(precision-16).
CoeffReport coeff_report_closed(unsigned n, std::size_t max_index, unsigned precision = kDefaultPrecision);

std::string to_string(CoeffSource s);

}  // namespace chebsqrt
