#include "chebsqrt/chebyshev.hpp"

#include "chebsqrt/errors.hpp"

namespace chebsqrt {

Polynomial cheb_poly(ChebKind kind, unsigned n) {
  Polynomial prev = Polynomial::constant(1);
  if (n == 0) return prev;
  Polynomial cur = Polynomial::monomial(kind == ChebKind::First ? 1 : 2, 1);
  const Polynomial two_x = Polynomial::monomial(2, 1);
  for (unsigned k = 1; k < n; ++k) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigFloat clenshaw(ChebKind kind, std::span<const BigFloat> coeffs, const BigFloat& x) {
  const unsigned prec = x.precision();
  if (coeffs.empty()) return BigFloat(prec);
  const BigFloat two_x = BigFloat(2L, prec) * x;
  BigFloat b1(prec);  // b_{k+1}
  BigFloat b2(prec);  // b_{k+2}
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    BigFloat bk = coeffs[k] + two_x * b1 - b2;
    b2 = std::move(b1);
    b1 = std::move(bk);
  }
  // P_0 = 1 for both kinds; P_1 = x (First) or 2x (Second).
  if (kind == ChebKind::First) return coeffs[0] + x * b1 - b2;
  return coeffs[0] + two_x * b1 - b2;
}

BigFloat cheb_eval(ChebKind kind, unsigned n, const BigFloat& x) {
  // Guard bits absorb the recurrence's rounding, which grows with n.
  const unsigned work = x.precision() + 32;
  std::vector<BigFloat> unit(n + 1, BigFloat(work));
  unit[n] = BigFloat(1L, work);
  return with_precision(clenshaw(kind, unit, with_precision(x, work)), x.precision());
}

std::vector<BigFloat> u_zero_nodes(unsigned n, unsigned precision) {
  if (n < 1) throw Error(Errc::BadIndex, "U_0 has no zeros");
  std::vector<BigFloat> nodes;
  nodes.reserve(n);
  for (unsigned k = 1; k <= n; ++k) nodes.push_back(cos_pi_fraction(k, n + 1, precision));
  return nodes;
}

}  // namespace chebsqrt
