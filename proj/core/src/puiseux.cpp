#include "galtrop/puiseux.hpp"

#include "galtrop/errors.hpp"

namespace galtrop {

namespace {

bool exponent_fits(const Rational& q, int level) {
  return Integer(Integer(level) % q.get_den()) == 0;
}

int denominator_of(const Rational& q) {
  if (!q.get_den().fits_sint_p()) throw MalformedInput("exponent denominator too large");
  return static_cast<int>(q.get_den().get_si());
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(int level) : level_(level) {
  if (level < 1) throw MalformedInput("Puiseux level must be positive");
}

PuiseuxSeries::PuiseuxSeries(int level, TermMap terms) : PuiseuxSeries(level) {
  for (auto& [q, c] : terms) {
    if (!exponent_fits(q, level)) {
      throw MalformedInput("exponent " + to_string(q) + " does not fit level " +
                           std::to_string(level));
    }
    if (c.is_zero()) continue;
    if (level % c.level() != 0) {
      throw MalformedInput("coefficient level " + std::to_string(c.level()) +
                           " does not divide series level " + std::to_string(level));
    }
    terms_.emplace(q, c.at_level(level));
  }
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c, int level) {
  TermMap terms;
  terms.emplace(Rational(0), Cyclotomic::from_rational(level, c));
  return PuiseuxSeries(level, std::move(terms));
}

PuiseuxSeries PuiseuxSeries::monomial(const Cyclotomic& c, const Rational& q) {
  const int level = lcm_level(c.level(), denominator_of(q));
  TermMap terms;
  terms.emplace(q, c.at_level(level));
  return PuiseuxSeries(level, std::move(terms));
}

PuiseuxSeries PuiseuxSeries::t_power(const Rational& q) {
  return monomial(Cyclotomic::from_rational(1, Rational(1)), q);
}

Valuation PuiseuxSeries::valuation() const {
  if (terms_.empty()) return Valuation::infinity();
  return Valuation(terms_.begin()->first);
}

const Cyclotomic& PuiseuxSeries::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("zero series has no leading coefficient");
  return terms_.begin()->second;
}

PuiseuxSeries PuiseuxSeries::at_level(int new_level) const {
  if (new_level % level_ != 0) {
    throw PreconditionError("series level " + std::to_string(level_) +
                            " does not divide " + std::to_string(new_level));
  }
  if (new_level == level_) return *this;
  PuiseuxSeries out(new_level);
  for (const auto& [q, c] : terms_) out.terms_.emplace(q, c.at_level(new_level));
  return out;
}

PuiseuxSeries PuiseuxSeries::pow(unsigned exponent) const {
  PuiseuxSeries result = constant(Rational(1), level_);
  PuiseuxSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

PuiseuxSeries PuiseuxSeries::monomial_inverse() const {
  if (!is_monomial()) throw PreconditionError("only monomial Puiseux series are invertible");
  const auto& [q, c] = *terms_.begin();
  TermMap terms;
  terms.emplace(Rational(-q), c.inverse());
  return PuiseuxSeries(level_, std::move(terms));
}

PuiseuxSeries PuiseuxSeries::truncated_inverse(const Rational& precision) const {
  if (is_zero()) throw PreconditionError("inverse of zero series");
  if (is_monomial()) return monomial_inverse();
  // f = lead·(1 + h) with val(h) > 0, 1/f = lead^{-1} Σ (-h)^j.
  const PuiseuxSeries lead_inv =
      PuiseuxSeries(level_, TermMap{*terms_.begin()}).monomial_inverse();
  const PuiseuxSeries h = (*this * lead_inv) - constant(Rational(1), level_);
  const PuiseuxSeries minus_h = -h;
  PuiseuxSeries sum = constant(Rational(1), level_);
  PuiseuxSeries power = sum;
  while (true) {
    power = (power * minus_h).truncated(precision);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * lead_inv;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& bound) const {
  PuiseuxSeries out(level_);
  for (const auto& [q, c] : terms_) {
    if (q >= bound) break;
    out.terms_.emplace(q, c);
  }
  return out;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& other) {
  const int l = lcm_level(level_, other.level_);
  if (l != level_) *this = at_level(l);
  const PuiseuxSeries rhs = other.at_level(l);
  for (const auto& [q, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(q, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& other) { return *this += -other; }

PuiseuxSeries& PuiseuxSeries::operator*=(const PuiseuxSeries& other) {
  const int l = lcm_level(level_, other.level_);
  const PuiseuxSeries lhs = at_level(l);
  const PuiseuxSeries rhs = other.at_level(l);
  PuiseuxSeries out(l);
  for (const auto& [q1, c1] : lhs.terms_) {
    for (const auto& [q2, c2] : rhs.terms_) {
      const Rational q = q1 + q2;
      Cyclotomic c = c1 * c2;
      auto [it, inserted] = out.terms_.try_emplace(q, c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return *this = std::move(out);
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries out = *this;
  for (auto& [q, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.level_ == b.level_) return a.terms_ == b.terms_;
  const int l = lcm_level(a.level_, b.level_);
  return a.at_level(l).terms_ == b.at_level(l).terms_;
}

Valuation puiseux_val(const PuiseuxSeries& f) { return f.valuation(); }

PuiseuxSeries galois_twist(long k, const PuiseuxSeries& f) {
  const int n = f.level();
  PuiseuxSeries::TermMap terms;
  for (const auto& [q, c] : f.terms()) {
    // q·N is an integer a; the term picks up ζ_N^{k a}.
    const Integer a = q.get_num() * (n / q.get_den());
    const long a_mod = mpz_class(a % n).get_si();
    const long exponent = ((k % n) * a_mod) % n;
    terms.emplace(q, c * Cyclotomic::zeta_power(n, exponent));
  }
  return PuiseuxSeries(n, std::move(terms));
}

PuiseuxSeries galois_twist(long k, const PuiseuxSeries& f, int level) {
  return galois_twist(k, f.at_level(level));
}

std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [q, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (q != 0) os << "*t^(" << to_string(q) << ")";
  }
  return os;
}

}  // namespace galtrop
