#include "galtrop/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "galtrop/errors.hpp"

namespace galtrop {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, divisor monic.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

// Remainder of p modulo the monic polynomial m.
Poly reduce_mod(Poly p, const std::vector<Integer>& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * m[j];
  }
  p.resize(d, Rational(0));
  return p;
}

std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  Poly q;
  trim(num);
  if (num.size() < den.size()) return {q, num};
  q.assign(num.size() - den.size() + 1, Rational(0));
  const Rational lead = den.back();
  for (std::size_t i = num.size(); i-- >= den.size();) {
    if (num[i] == 0) continue;
    const Rational c = num[i] / lead;
    q[i - den.size() + 1] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i - den.size() + 1 + j] -= c * den[j];
  }
  trim(num);
  trim(q);
  return {q, num};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  if (n < 1) throw MalformedInput("cyclotomic level must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Φ_d for every proper divisor d.
  std::vector<Integer> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

int lcm_level(int a, int b) { return std::lcm(a, b); }

Cyclotomic::Cyclotomic(int level) : level_(level) {
  coeffs_.assign(euler_phi(level), Rational(0));
}

Cyclotomic::Cyclotomic(int level, std::vector<Rational> poly) : level_(level) {
  coeffs_ = reduce_mod(std::move(poly), cyclotomic_polynomial(level));
}

Cyclotomic Cyclotomic::from_rational(int level, const Rational& q) {
  return Cyclotomic(level, std::vector<Rational>{q});
}

Cyclotomic Cyclotomic::zeta_power(int level, long k) {
  long e = k % level;
  if (e < 0) e += level;
  std::vector<Rational> poly(e + 1, Rational(0));
  poly[e] = 1;
  return Cyclotomic(level, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::at_level(int new_level) const {
  if (new_level % level_ != 0) {
    throw PreconditionError("cannot move Q(ζ_" + std::to_string(level_) + ") to level " +
                            std::to_string(new_level));
  }
  if (new_level == level_) return *this;
  const int m = new_level / level_;
  std::vector<Rational> poly(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * m + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * m] = coeffs_[i];
  return Cyclotomic(new_level, std::move(poly));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero cyclotomic number");
  // Extended Euclid: s·a + t·Φ = gcd, and gcd is a nonzero constant since Φ is irreducible.
  const auto& phi_int = cyclotomic_polynomial(level_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is the nonzero constant g with s1·a ≡ g.
  for (auto& c : s1) c /= r1[0];
  return Cyclotomic(level_, std::move(s1));
}

void Cyclotomic::align_with(Cyclotomic& other) {
  if (level_ == other.level_) return;
  const int l = lcm_level(level_, other.level_);
  *this = at_level(l);
  other = other.at_level(l);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  Cyclotomic rhs = other;
  align_with(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  Cyclotomic rhs = other;
  align_with(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  Cyclotomic rhs = other;
  align_with(rhs);
  coeffs_ = reduce_mod(poly_mul(coeffs_, rhs.coeffs_), cyclotomic_polynomial(level_));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
  const int l = lcm_level(a.level_, b.level_);
  return a.at_level(l).coeffs_ == b.at_level(l).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  bool first = true;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    if (c.coeffs()[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(c.coeffs()[i]);
    if (i > 0) os << "*z" << c.level() << "^" << i;
  }
  if (first) os << "0";
  return os;
}

}  // namespace galtrop
