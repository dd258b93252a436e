#pragma once

#include <random>
#include <vector>

#include "galtrop/complex.hpp"
#include "galtrop/fan.hpp"
#include "galtrop/laurent.hpp"
#include "galtrop/twist.hpp"

namespace galtrop::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline LaurentPolynomial term(long x, long y, const PuiseuxSeries& c) {
  return LaurentPolynomial::monomial(IntVector{x, y}, c);
}

inline LaurentPolynomial term(long x, long y, long t_exp = 0) {
  return term(x, y, PuiseuxSeries::t_power(q(t_exp)));
}

/// The genus-10 plane sextic made of nine Z/3-orbits of trinomials plus the constant 1.
inline LaurentPolynomial brauer_severi_sextic() {
  struct Orbit {
    long t;
    std::vector<std::pair<long, long>> exps;
  };
  const std::vector<Orbit> orbits = {
      {12, {{-2, -2}, {-2, 4}, {4, -2}}}, {7, {{-1, -2}, {-2, 3}, {3, -1}}},
      {7, {{3, -2}, {-2, -1}, {-1, 3}}},  {4, {{0, -2}, {-2, 2}, {2, 0}}},
      {4, {{0, 2}, {2, -2}, {-2, 0}}},    {3, {{1, -2}, {-2, 1}, {1, 1}}},
      {3, {{-1, 2}, {2, -1}, {-1, -1}}},  {1, {{0, -1}, {-1, 1}, {1, 0}}},
      {1, {{0, 1}, {1, -1}, {-1, 0}}},
  };
  LaurentPolynomial f = term(0, 0);
  for (const auto& o : orbits) {
    for (const auto& [a, b] : o.exps) f += term(a, b, o.t);
  }
  return f;
}

inline Fan p2_fan() { return Fan::projective_space(2); }

inline LatticeMap z3_generator() { return LatticeMap(IntMatrix{{0, -1}, {1, -1}}); }

inline TwistedToricVariety z3_twist(int level = 1, long residue = 0) {
  return make_twist(p2_fan(), {z3_generator()}, {3}, {residue}, level);
}

inline LaurentPolynomial tropical_line() { return term(1, 0) + term(0, 1) + term(0, 0); }

inline Fan p1_fan() { return Fan(1, {{1}, {-1}}, {{0}, {1}}); }

inline Fan p1xp1_fan() { return product_fan(p1_fan(), p1_fan()); }

/// Seeded generator of random exact data.
class RandomData {
 public:
  explicit RandomData(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long span, long max_den) {
    return make_rational(integer(-span * max_den, span * max_den), integer(1, max_den));
  }

  Cyclotomic cyclotomic(int level) {
    Cyclotomic c(level);
    for (int k = 0; k < level; ++k) {
      if (integer(0, 2) == 0) c = c + Cyclotomic::zeta_power(level, k) * Cyclotomic::from_rational(level, rational(3, 3));
    }
    if (c.is_zero()) c = Cyclotomic::from_rational(level, Rational(integer(1, 4)));
    return c;
  }

  /// Nonzero series with up to `max_terms` terms and exponents in (1/level)·[-6, 6].
  PuiseuxSeries puiseux(int level, int max_terms) {
    PuiseuxSeries::TermMap terms;
    const long n = integer(1, max_terms);
    for (long i = 0; i < n; ++i) {
      terms.emplace(make_rational(integer(-6, 6), level), cyclotomic(level));
    }
    PuiseuxSeries s(level, terms);
    return s.is_zero() ? PuiseuxSeries::constant(Rational(1), level) : s;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace galtrop::testing
