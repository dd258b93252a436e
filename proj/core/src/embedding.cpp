#include "galtrop/embedding.hpp"

#include <algorithm>
#include <numeric>

#include "galtrop/errors.hpp"

namespace galtrop {

std::vector<Valuation> trop_point(std::span<const PuiseuxSeries> coords) {
  std::vector<Valuation> out;
  for (const auto& c : coords) out.push_back(puiseux_val(c));
  if (std::all_of(out.begin(), out.end(), [](const Valuation& v) { return v.is_infinite(); })) {
    throw PreconditionError("point has every coordinate zero");
  }
  return out;
}

TropPoint trop_point_in_fan(std::span<const Valuation> values, const Fan& fan) {
  if (static_cast<int>(values.size()) != fan.rank()) {
    throw PreconditionError("valuation tuple does not match the fan rank");
  }
  std::vector<int> rays;
  RationalVector finite(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_infinite()) {
      IntVector e(values.size(), 0);
      e[i] = 1;
      const auto r = fan.find_ray(e);
      if (!r) throw PreconditionError("infinite coordinate " + std::to_string(i) + " has no ray in the fan");
      rays.push_back(*r);
    } else {
      finite[i] = values[i].value();
    }
  }
  std::sort(rays.begin(), rays.end());
  const auto cone = fan.find_cone(rays);
  if (!cone) throw PreconditionError("infinite coordinates do not span a cone of the fan");
  if (*cone == 0) return TropPoint::interior(std::move(finite));
  return TropPoint::on_stratum(fan, *cone, finite);
}

std::vector<PuiseuxSeries> evaluate_embedding(const EmbeddingData& e,
                                              std::span<const PuiseuxSeries> x) {
  std::vector<PuiseuxSeries> out;
  for (const auto& c : e.coordinates) out.push_back(c.evaluate(x));
  return out;
}

namespace {

PuiseuxSeries power(const PuiseuxSeries& x, long e, const Rational& precision) {
  if (e >= 0) return x.pow(static_cast<unsigned>(e));
  const PuiseuxSeries inv = x.is_monomial() ? x.monomial_inverse() : x.truncated_inverse(precision);
  return inv.pow(static_cast<unsigned>(-e));
}

}  // namespace

std::vector<PuiseuxSeries> act_on_torus_point(const TwistedToricVariety& twist, int g,
                                              std::span<const PuiseuxSeries> x,
                                              const Rational& precision) {
  const LatticeMap& a = twist.action(g);
  if (static_cast<int>(x.size()) != a.rank()) throw PreconditionError("point has wrong rank");
  const long k = twist.residue(g);
  const int level = twist.level();
  std::vector<PuiseuxSeries> out;
  for (int i = 0; i < a.rank(); ++i) {
    // Row i of A is the exponent vector A^T e_i.
    PuiseuxSeries value = PuiseuxSeries::constant(Rational(1));
    for (int j = 0; j < a.rank(); ++j) {
      const long e = a.matrix()(i, j);
      if (e != 0) value *= power(x[j], e, precision);
    }
    out.push_back(galois_twist(-k, value, level));
  }
  return out;
}

EmbeddingData equivariantize_embedding(const EmbeddingData& e, int order) {
  if (order < 1) throw PreconditionError("group order must be positive");
  if (e.coordinates.empty()) throw PreconditionError("embedding has no coordinates");
  if (!e.target.is_trivial()) throw PreconditionError("embedding must carry the trivial twist");
  if (order == 1) return e;
  for (const auto& c : e.coordinates) {
    if (order % c.level() != 0) {
      throw PreconditionError("coefficient level " + std::to_string(c.level()) +
                              " does not divide the group order");
    }
  }
  const int n = static_cast<int>(e.coordinates.size());
  EmbeddingData out{{}, trivial_twist(Fan::point())};
  for (int k = 0; k < order; ++k) {
    for (const auto& c : e.coordinates) out.coordinates.push_back(twist_coefficients(k, c, order));
  }
  Fan fan = e.target.fan();
  for (int k = 1; k < order; ++k) fan = product_fan(fan, e.target.fan());
  // A^T e_{(k, i)} = e_{(k+1, i)}: A has a 1 at row (k, i), column (k+1, i).
  const int total = n * order;
  IntMatrix a(total, total);
  for (int k = 0; k < order; ++k) {
    for (int i = 0; i < n; ++i) a(k * n + i, ((k + 1) % order) * n + i) = 1;
  }
  out.target = make_twist(std::move(fan), {LatticeMap(a)}, {order}, {1}, order);
  return out;
}

bool check_embedding_consistency(const EmbeddingData& e) {
  const auto& t = e.target;
  const int n = static_cast<int>(e.coordinates.size());
  if (n != t.fan().rank()) return false;
  for (int g : t.group().generators()) {
    const LatticeMap at = t.action(g).transpose();
    for (int c = 0; c < n; ++c) {
      IntVector unit(n, 0);
      unit[c] = 1;
      const IntVector image = at.apply(std::span<const long>(unit));
      const auto hit = std::find(image.begin(), image.end(), 1);
      if (hit == image.end() || std::count(image.begin(), image.end(), 0) != n - 1) return false;
      const int target = static_cast<int>(hit - image.begin());
      const int level = std::lcm(t.level(), e.coordinates[c].level());
      if (!(twist_coefficients(t.residue(g), e.coordinates[c], level) ==
            e.coordinates[target].at_level(level))) {
        return false;
      }
    }
  }
  return true;
}

OrbitImage orbit_image(const std::vector<std::vector<PuiseuxSeries>>& orbit,
                       const EmbeddingData& e, int generator) {
  const auto& t = e.target;
  if (generator < 0 || generator >= t.group().size()) throw PreconditionError("no such group element");
  const long k = t.residue(generator);
  std::vector<int> successor;
  for (const auto& x : orbit) {
    std::vector<PuiseuxSeries> moved;
    for (const auto& c : x) moved.push_back(galois_twist(-k, c, t.level()));
    int found = -1;
    for (std::size_t j = 0; j < orbit.size() && found < 0; ++j) {
      if (orbit[j].size() != moved.size()) continue;
      bool same = true;
      for (std::size_t i = 0; i < moved.size() && same; ++i) same = orbit[j][i] == moved[i];
      if (same) found = static_cast<int>(j);
    }
    if (found < 0) throw PreconditionError("orbit is not closed under the generator");
    successor.push_back(found);
  }
  OrbitImage out;
  for (const auto& x : orbit) {
    out.values.push_back(trop_point(evaluate_embedding(e, x)));
    out.images.push_back(trop_point_in_fan(out.values.back(), t.fan()));
  }
  auto sorted = out.images;
  std::sort(sorted.begin(), sorted.end());
  out.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  out.action_compatible = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (!(act_on_trop_point(t, generator, out.images[i]) == out.images[successor[i]])) {
      out.action_compatible = false;
    }
  }
  return out;
}

}  // namespace galtrop
