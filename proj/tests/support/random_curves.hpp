#pragma once

#include <set>

#include "galtrop/embedding.hpp"
#include "galtrop/errors.hpp"
#include "support/fixtures.hpp"

namespace galtrop::testing {

/// Random plane polynomial with `terms` distinct exponents in [-3, 3]^2 whose
/// support is not collinear; valuations are small rationals. Needs terms >= 3.
inline LaurentPolynomial random_curve(RandomData& rnd, int terms) {
  if (terms < 3) throw PreconditionError("a non-collinear support needs three terms");
  while (true) {
    std::set<IntVector> exps;
    while (static_cast<int>(exps.size()) < terms) exps.insert(IntVector{rnd.integer(-3, 3), rnd.integer(-3, 3)});
    std::vector<IntVector> pts(exps.begin(), exps.end());
    bool collinear = true;
    for (std::size_t i = 2; i < pts.size() && collinear; ++i) {
      collinear = (pts[1][0] - pts[0][0]) * (pts[i][1] - pts[0][1]) ==
                  (pts[1][1] - pts[0][1]) * (pts[i][0] - pts[0][0]);
    }
    if (collinear) continue;
    LaurentPolynomial f(2);
    for (const auto& u : pts) {
      f += LaurentPolynomial::monomial(u, PuiseuxSeries::monomial(Cyclotomic::from_rational(1, Rational(rnd.integer(1, 5))),
                                                                   make_rational(rnd.integer(-6, 6), rnd.integer(1, 2))));
    }
    return f;
  }
}

/// Random nontrivial cyclic twist: a fan automorphism of one of P², P¹×P¹, P³ with a residue
/// compatible with its order at a random level.
struct RandomTwist {
  TwistedToricVariety twist;
  int generator;
};

inline RandomTwist random_twist(RandomData& rnd) {
  static const std::vector<Fan> fans{Fan::projective_space(2), product_fan(Fan(1, {{1}, {-1}}, {{0}, {1}}), Fan(1, {{1}, {-1}}, {{0}, {1}})),
                                     Fan::projective_space(3)};
  const Fan& fan = fans[rnd.integer(0, static_cast<long>(fans.size()) - 1)];
  const auto autos = enumerate_automorphisms(fan);
  const LatticeMap identity = LatticeMap::identity(fan.rank());
  LatticeMap a = identity;
  while (a == identity) a = autos[rnd.integer(0, static_cast<long>(autos.size()) - 1)];
  int order = 1;
  while (!(a.matrix().power(order) == IntMatrix::identity(fan.rank()))) ++order;
  static const std::vector<int> levels{1, 2, 3, 4, 6};
  const int level = levels[rnd.integer(0, static_cast<long>(levels.size()) - 1)];
  const long step = level / std::gcd(level, order);
  const long residue = step * rnd.integer(0, level / step - 1);
  TwistedToricVariety t = make_twist(fan, {a}, {order}, {residue}, level);
  const int g = t.group().generators().empty() ? 0 : t.group().generators()[0];
  return {std::move(t), g};
}

}  // namespace galtrop::testing
