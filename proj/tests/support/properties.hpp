#pragma once

#include <sstream>
#include <string>

#include "galtrop/complex.hpp"
#include "galtrop/embedding.hpp"
#include "galtrop/groebner.hpp"
#include "galtrop/homology.hpp"
#include "support/fixtures.hpp"
#include "support/random_curves.hpp"

namespace galtrop::testing {

/// Outcome of a randomized property run; `detail` names the first counterexample.
struct PropertyResult {
  bool passed = true;
  long cases = 0;
  std::string detail;

  template <typename... Parts>
  void fail(const Parts&... parts) {
    if (!passed) return;
    passed = false;
    std::ostringstream os;
    (os << ... << parts);
    detail = os.str();
  }
};

/// val(fg) = val(f) + val(g) and val(galois_twist(k, f)) = val(f).
inline PropertyResult valuation_property(unsigned seed, int pairs) {
  RandomData rnd(seed);
  PropertyResult r;
  for (int trial = 0; trial < pairs && r.passed; ++trial) {
    const PuiseuxSeries f = rnd.puiseux(static_cast<int>(rnd.integer(1, 8)), 4);
    const PuiseuxSeries g = rnd.puiseux(static_cast<int>(rnd.integer(1, 8)), 4);
    const long k = rnd.integer(-20, 20);
    if (!(puiseux_val(f * g) == puiseux_val(f) + puiseux_val(g))) r.fail("val(fg) for ", f, " and ", g);
    if (!(puiseux_val(galois_twist(k, f)) == puiseux_val(f))) r.fail("twist ", k, " of ", f);
    ++r.cases;
  }
  return r;
}

/// trop(g·x) = g*(trop(x)) for random torus points over random cyclic twists.
inline PropertyResult trop_equivariance_property(unsigned seed, int twists, int points_per_twist) {
  RandomData rnd(seed);
  PropertyResult r;
  for (int ti = 0; ti < twists && r.passed; ++ti) {
    const RandomTwist rt = random_twist(rnd);
    const TwistedToricVariety& t = rt.twist;
    for (int trial = 0; trial < points_per_twist && r.passed; ++trial) {
      std::vector<PuiseuxSeries> x;
      for (int i = 0; i < t.fan().rank(); ++i) x.push_back(rnd.puiseux(t.level(), 3));
      for (int g = 0; g < t.group().size(); ++g) {
        const TropPoint lhs = trop_point_in_fan(trop_point(act_on_torus_point(t, g, x)), t.fan());
        const TropPoint rhs = act_on_trop_point(t, g, trop_point_in_fan(trop_point(x), t.fan()));
        if (!(lhs == rhs)) r.fail("twist ", ti, " element ", g, ": ", lhs, " vs ", rhs);
      }
      ++r.cases;
    }
  }
  return r;
}

/// Weighted outgoing directions sum to zero at every sedentarity-zero vertex.
inline PropertyResult balancing_property(unsigned seed, int curves) {
  RandomData rnd(seed);
  PropertyResult r;
  for (int trial = 0; trial < curves && r.passed; ++trial) {
    const LaurentPolynomial f = random_curve(rnd, static_cast<int>(rnd.integer(3, 12)));
    const TropicalComplex c = trop_curve_2d(f);
    std::vector<IntVector> sum(c.vertices.size(), IntVector{0, 0});
    for (const auto& e : c.edges) {
      for (int i = 0; i < 2; ++i) {
        sum[e.tail][i] += e.weight * e.direction[i];
        sum[e.head][i] -= e.weight * e.direction[i];
      }
    }
    for (const auto& ray : c.rays) {
      for (int i = 0; i < 2; ++i) sum[ray.vertex][i] += ray.weight * ray.direction[i];
    }
    for (std::size_t v = 0; v < sum.size(); ++v) {
      if (c.vertices[v].is_interior() && sum[v] != IntVector{0, 0}) r.fail(f, " unbalanced at ", c.vertices[v]);
    }
    ++r.cases;
  }
  return r;
}

/// Support membership agrees with |argmin| >= 2 on the grid (i/4, j/4), -20 <= i, j <= 20.
inline PropertyResult grid_oracle_property(unsigned seed, int curves) {
  RandomData rnd(seed);
  PropertyResult r;
  for (int trial = 0; trial < curves && r.passed; ++trial) {
    const LaurentPolynomial f = random_curve(rnd, static_cast<int>(rnd.integer(3, 12)));
    const TropicalComplex c = trop_curve_2d(f);
    for (int i = -20; i <= 20 && r.passed; ++i) {
      for (int j = -20; j <= 20; ++j) {
        const RationalVector v{make_rational(i, 4), make_rational(j, 4)};
        if (support_contains(c, v) != (groebner_cell(f, v).size() >= 2)) {
          r.fail(f, " disagrees at (", i, "/4, ", j, "/4)");
          break;
        }
      }
    }
    ++r.cases;
  }
  return r;
}

/// A_g carries argmin cells of an invariant f to argmin cells: cell(A_g v) = A_g^{-T} cell(v).
inline PropertyResult groebner_equivariance_property(const LaurentPolynomial& f,
                                                     const TwistedToricVariety& t, unsigned seed,
                                                     int samples) {
  RandomData rnd(seed);
  PropertyResult r;
  for (int trial = 0; trial < samples && r.passed; ++trial) {
    RationalVector v(t.fan().rank());
    for (auto& x : v) x = rnd.rational(6, 3);
    const auto cell = groebner_cell(f, v);
    for (int g = 0; g < t.group().size(); ++g) {
      const RationalVector av = t.action(g).apply(std::span<const Rational>(v));
      if (map_groebner_cell(t, g, cell) != groebner_cell(f, av)) r.fail("element ", g, " at sample ", trial);
    }
    ++r.cases;
  }
  return r;
}

/// Chain maps commute with ∂, induced matrices satisfy the group law (op order),
/// generators have the right orders, and traces match the recorded characters.
inline PropertyResult homology_action_property(const TropicalComplex& c, const TwistedToricVariety& t) {
  PropertyResult r;
  const FiniteGroup& grp = t.group();
  for (int p = 0; p < 2; ++p) {
    const ChainComplex cc = chain_complex(c, p);
    for (int g = 0; g < grp.size(); ++g) {
      const ChainMap phi = chain_map(c, t, g, p);
      if (!(phi.on_c0 * cc.boundary == cc.boundary * phi.on_c1)) r.fail("chain map of ", g, " on F_", p);
      ++r.cases;
    }
    for (int q = 0; q < 2; ++q) {
      std::vector<QMatrix> m;
      for (int g = 0; g < grp.size(); ++g) m.push_back(induced_action(c, t, g, p, q).matrix);
      if (!m[grp.identity()].is_identity()) r.fail("identity acts nontrivially on H_", p, q);
      for (int g = 0; g < grp.size(); ++g) {
        if (!m[g].power(static_cast<unsigned>(grp.order_of(g))).is_identity()) {
          r.fail("element ", g, " has wrong order on H_", p, q);
        }
        for (int h = 0; h < grp.size(); ++h) {
          if (!(m[grp.multiply(g, h)] == m[h] * m[g])) r.fail("group law fails for ", g, ",", h, " on H_", p, q);
          ++r.cases;
        }
      }
    }
  }
  return r;
}

/// f summed over its orbit under t: an invariant polynomial whenever t acts with residue 0.
inline LaurentPolynomial symmetrize(const LaurentPolynomial& f, const TwistedToricVariety& t) {
  LaurentPolynomial out(f.rank());
  for (int g = 0; g < t.group().size(); ++g) out += act_on_laurent(t, g, f);
  return out;
}

}  // namespace galtrop::testing
