#pragma once

#include <span>
#include <vector>

#include "chebsqrt/bigfloat.hpp"
#include "chebsqrt/polynomial.hpp"

namespace chebsqrt {

enum class ChebKind { First, Second };

/// Exact coefficients of T_n or U_n from P_{k+1} = 2x P_k - P_{k-1}.
Polynomial cheb_poly(ChebKind kind, unsigned n);

/// Sum_k coeffs[k] * P_k(x) by Clenshaw's backward recurrence, at the precision of x.
BigFloat clenshaw(ChebKind kind, std::span<const BigFloat> coeffs, const BigFloat& x);

/// P_n(x) for a single basis polynomial.
BigFloat cheb_eval(ChebKind kind, unsigned n, const BigFloat& x);

/// Zeros of U_n: cos(k*pi/(n+1)) for k = 1..n, in decreasing order.
/// Computed from the angles directly, with exact zero and exact antisymmetry.
std::vector<BigFloat> u_zero_nodes(unsigned n, unsigned precision = kDefaultPrecision);

}  // namespace chebsqrt
