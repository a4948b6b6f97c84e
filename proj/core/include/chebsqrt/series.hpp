#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chebsqrt/rational_function.hpp"

namespace chebsqrt {

/// Taylor coefficients c_0..c_M of a function analytic at the origin.
struct PowerSeriesPrefix {
  std::vector<Rational> coeffs;
  std::string source;

  std::size_t size() const noexcept { return coeffs.size(); }
  const Rational& operator[](std::size_t m) const { return coeffs[m]; }

  /// First `count` coefficients, same source.
  PowerSeriesPrefix truncated(std::size_t count) const;
};

/// Solves den * c = num term by term:
///   c_m = (a_m - sum_{j=1..m} b_j c_{m-j}) / b_0.
/// Throws Error{NotAnalyticAtZero} if den(0) == 0.
PowerSeriesPrefix taylor_coefficients(const RationalFunction& f, std::size_t max_index, std::string source = {});

}  // namespace chebsqrt
