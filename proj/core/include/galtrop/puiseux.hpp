#pragma once

#include <map>
#include <ostream>

#include "galtrop/cyclotomic.hpp"
#include "galtrop/rational.hpp"

namespace galtrop {

/// Finite Puiseux series Σ c_q t^q with coefficients in Q(ζ_N).
///
/// The level N bounds exponent denominators (q·N ∈ Z) and is also the
/// cyclotomic level of every coefficient. Binary operations move both
/// operands to the lcm of their levels first.
class PuiseuxSeries {
 public:
  using TermMap = std::map<Rational, Cyclotomic>;

  PuiseuxSeries() : PuiseuxSeries(1) {}
  explicit PuiseuxSeries(int level);
  /// Zero coefficients are dropped; coefficients at a divisor level are lifted.
  PuiseuxSeries(int level, TermMap terms);

  static PuiseuxSeries constant(const Rational& c, int level = 1);
  /// c·t^q at the smallest level that houses q and c.
  static PuiseuxSeries monomial(const Cyclotomic& c, const Rational& q);
  static PuiseuxSeries t_power(const Rational& q);

  int level() const { return level_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Minimal exponent; ∞ for zero. Normalized so val(t) = 1.
  Valuation valuation() const;
  const Cyclotomic& leading_coefficient() const;

  PuiseuxSeries at_level(int new_level) const;

  PuiseuxSeries pow(unsigned exponent) const;
  /// Exact inverse; only monomials are invertible inside finite series.
  PuiseuxSeries monomial_inverse() const;
  /// Inverse truncated to exponents < val(1/f) + precision. Exact for monomials.
  PuiseuxSeries truncated_inverse(const Rational& precision) const;
  /// Drops every term with exponent >= bound.
  PuiseuxSeries truncated(const Rational& bound) const;

  PuiseuxSeries& operator+=(const PuiseuxSeries& other);
  PuiseuxSeries& operator-=(const PuiseuxSeries& other);
  PuiseuxSeries& operator*=(const PuiseuxSeries& other);
  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
  friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
  friend PuiseuxSeries operator*(PuiseuxSeries a, const PuiseuxSeries& b) { return a *= b; }
  PuiseuxSeries operator-() const;

  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

 private:
  int level_;
  TermMap terms_;
};

Valuation puiseux_val(const PuiseuxSeries& f);

/// Action of k ∈ Z/N = Gal(C((t^{1/N}))/C((t))): t^{a/N} ↦ ζ_N^{ka} t^{a/N}.
/// Coefficients are fixed; f is taken at its own level.
PuiseuxSeries galois_twist(long k, const PuiseuxSeries& f);
/// Same, with k read modulo `level`; f is first lifted to that level.
PuiseuxSeries galois_twist(long k, const PuiseuxSeries& f, int level);

std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& f);

}  // namespace galtrop
