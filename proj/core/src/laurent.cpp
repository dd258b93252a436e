#include "galtrop/laurent.hpp"

#include "galtrop/errors.hpp"

namespace galtrop {

LaurentPolynomial::LaurentPolynomial(int rank, TermMap terms) : rank_(rank) {
  for (auto& [u, c] : terms) {
    if (static_cast<int>(u.size()) != rank) throw MalformedInput("exponent has wrong rank");
    if (!c.is_zero()) terms_.emplace(u, std::move(c));
  }
  normalize_level();
}

void LaurentPolynomial::normalize_level() {
  int l = level_;
  for (const auto& [u, c] : terms_) l = lcm_level(l, c.level());
  level_ = l;
  for (auto& [u, c] : terms_) {
    if (c.level() != l) c = c.at_level(l);
  }
}

LaurentPolynomial LaurentPolynomial::monomial(IntVector exponent, PuiseuxSeries coeff) {
  const int rank = static_cast<int>(exponent.size());
  TermMap terms;
  terms.emplace(std::move(exponent), std::move(coeff));
  return LaurentPolynomial(rank, std::move(terms));
}

LaurentPolynomial LaurentPolynomial::constant(int rank, PuiseuxSeries coeff) {
  return monomial(IntVector(rank, 0), std::move(coeff));
}

LaurentPolynomial LaurentPolynomial::variable(int rank, int index) {
  IntVector u(rank, 0);
  u.at(index) = 1;
  return monomial(std::move(u), PuiseuxSeries::constant(Rational(1)));
}

LaurentPolynomial LaurentPolynomial::at_level(int new_level) const {
  LaurentPolynomial out = *this;
  out.level_ = lcm_level(new_level, level_);
  if (out.level_ != new_level) {
    throw PreconditionError("polynomial level " + std::to_string(level_) + " does not divide " +
                            std::to_string(new_level));
  }
  out.normalize_level();
  return out;
}

PuiseuxSeries LaurentPolynomial::evaluate(std::span<const PuiseuxSeries> point) const {
  if (static_cast<int>(point.size()) != rank_) throw MalformedInput("point has wrong rank");
  PuiseuxSeries sum(level_);
  for (const auto& [u, c] : terms_) {
    PuiseuxSeries term = c;
    for (int i = 0; i < rank_; ++i) {
      if (u[i] > 0) {
        term *= point[i].pow(static_cast<unsigned>(u[i]));
      } else if (u[i] < 0) {
        term *= point[i].monomial_inverse().pow(static_cast<unsigned>(-u[i]));
      }
    }
    sum += term;
  }
  return sum;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.rank_ != rank_) throw MalformedInput("rank mismatch in polynomial sum");
  for (const auto& [u, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  normalize_level();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  LaurentPolynomial neg = other;
  for (auto& [u, c] : neg.terms_) c = -c;
  return *this += neg;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  if (other.rank_ != rank_) throw MalformedInput("rank mismatch in polynomial product");
  TermMap out;
  for (const auto& [u1, c1] : terms_) {
    for (const auto& [u2, c2] : other.terms_) {
      IntVector u(rank_);
      for (int i = 0; i < rank_; ++i) u[i] = u1[i] + u2[i];
      PuiseuxSeries c = c1 * c2;
      auto [it, inserted] = out.try_emplace(std::move(u), c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  terms_ = std::move(out);
  normalize_level();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const PuiseuxSeries& scalar) {
  for (auto& [u, c] : terms_) c *= scalar;
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  normalize_level();
  return *this;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [u, c] : a.terms_) {
    if (it->first != u || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [u, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c << "]";
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != 0) os << "*x" << i << "^" << u[i];
    }
  }
  return os;
}

LaurentPolynomial twist_coefficients(long k, const LaurentPolynomial& f, int level) {
  LaurentPolynomial::TermMap terms;
  for (const auto& [u, c] : f.terms()) terms.emplace(u, galois_twist(k, c, level));
  return LaurentPolynomial(f.rank(), std::move(terms));
}

LaurentPolynomial act_on_laurent(const TwistedToricVariety& twist, int g,
                                 const LaurentPolynomial& f) {
  if (f.rank() != twist.fan().rank()) throw PreconditionError("polynomial rank differs from fan rank");
  const int level = twist.level();
  if (level % f.level() != 0) {
    throw PreconditionError("polynomial coefficients live at level " + std::to_string(f.level()) +
                            ", twist acts at level " + std::to_string(level));
  }
  const LatticeMap dual = dual_character_action(twist, g);
  LaurentPolynomial::TermMap terms;
  for (const auto& [u, c] : f.terms()) {
    terms.emplace(dual.apply(std::span<const long>(u)), galois_twist(twist.residue(g), c, level));
  }
  return LaurentPolynomial(f.rank(), std::move(terms));
}

bool is_invariant_hypersurface(const TwistedToricVariety& twist, const LaurentPolynomial& f) {
  if (f.is_zero()) return true;
  for (int g : twist.group().generators()) {
    const LaurentPolynomial image = act_on_laurent(twist, g, f);
    if (image.size() != f.size()) return false;
    // Units of the Laurent ring are c·χ^w; translation keeps the lex-least exponent least.
    const auto& [u0, a0] = *f.terms().begin();
    const auto& [v0, b0] = *image.terms().begin();
    IntVector w(u0.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = v0[i] - u0[i];
    if (b0.valuation() != a0.valuation()) return false;
    const Cyclotomic c = b0.leading_coefficient() * a0.leading_coefficient().inverse();
    if (!(image == f * LaurentPolynomial::monomial(w, PuiseuxSeries::monomial(c, Rational(0))))) return false;
  }
  return true;
}

}  // namespace galtrop
