#include "chebsqrt/series.hpp"

#include <algorithm>

#include "chebsqrt/errors.hpp"

namespace chebsqrt {

PowerSeriesPrefix PowerSeriesPrefix::truncated(std::size_t count) const {
  count = std::min(count, coeffs.size());
  return {std::vector<Rational>(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(count)), source};
}

PowerSeriesPrefix taylor_coefficients(const RationalFunction& f, std::size_t max_index, std::string source) {
  const auto& a = f.num().coeffs();
  const auto& b = f.den().coeffs();
  if (b.empty() || b[0] == 0) throw Error(Errc::NotAnalyticAtZero, "denominator vanishes at z = 0");

  const Rational inv_b0 = 1 / b[0];
  std::vector<Rational> c(max_index + 1);
  Rational acc;
  for (std::size_t m = 0; m <= max_index; ++m) {
    acc = m < a.size() ? a[m] : Rational(0);
    const std::size_t jmax = std::min(m, b.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) acc -= b[j] * c[m - j];
    c[m] = acc * inv_b0;
  }
  return {std::move(c), std::move(source)};
}

}  // namespace chebsqrt
