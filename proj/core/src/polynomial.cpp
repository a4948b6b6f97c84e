#include "chebsqrt/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "chebsqrt/errors.hpp"

namespace chebsqrt {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> cs(k + 1);
  cs[k] = c;
  return Polynomial(std::move(cs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(Errc::BadIndex, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& z) const {
  return horner<Rational>(coeffs_, z, Rational(0));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Polynomial poly_z() { return Polynomial::monomial(1, 1); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::ZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};

  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational q = rem[i + db] / lead;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs()[j];
    quot[i] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

// Arithmetic in F_p with p = 2^61 - 1, used as a fast filter for coprime inputs.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  u128 prod = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1u) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::optional<std::uint64_t> reduce_rational(const Rational& q) {
  static const Integer prime(std::to_string(kPrime), 10);
  Integer num, den;
  mpz_mod(num.get_mpz_t(), q.get_num_mpz_t(), prime.get_mpz_t());
  mpz_mod(den.get_mpz_t(), q.get_den_mpz_t(), prime.get_mpz_t());
  if (den == 0) return std::nullopt;
  std::uint64_t n = mpz_get_ui(num.get_mpz_t());
  std::uint64_t d = mpz_get_ui(den.get_mpz_t());
  return mul_mod(n, inv_mod(d));
}

// Image of a polynomial in F_p[z], or nullopt if the leading coefficient vanishes
// or a denominator is not invertible.
std::optional<std::vector<std::uint64_t>> reduce_poly(const Polynomial& a) {
  std::vector<std::uint64_t> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    auto r = reduce_rational(c);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  if (!out.empty() && out.back() == 0) return std::nullopt;
  return out;
}

void trim_mod(std::vector<std::uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    if (a.size() >= b.size()) {
      const std::uint64_t inv_lead = inv_mod(b.back());
      const std::size_t db = b.size() - 1;
      for (std::size_t i = a.size() - b.size() + 1; i-- > 0;) {
        std::uint64_t q = mul_mod(a[i + db], inv_lead);
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) {
          std::uint64_t t = mul_mod(q, b[j]);
          a[i + j] = a[i + j] >= t ? a[i + j] - t : a[i + j] + kPrime - t;
        }
      }
      a.resize(db);
      trim_mod(a);
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial::constant(1);

  // deg gcd over Q <= deg gcd mod p whenever p keeps both leading coefficients.
  auto ra = reduce_poly(a);
  auto rb = reduce_poly(b);
  if (ra && rb && gcd_degree_mod(*ra, *rb) == 0) return Polynomial::constant(1);

  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

}  // namespace chebsqrt
