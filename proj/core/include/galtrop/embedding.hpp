#pragma once

#include <span>
#include <vector>

#include "galtrop/extended.hpp"
#include "galtrop/laurent.hpp"
#include "galtrop/twist.hpp"

namespace galtrop {

/// A map X → Y_Σ given by coordinate functions on X's torus; the valuations
/// of the coordinates are the tropical coordinates of a point.
struct EmbeddingData {
  std::vector<LaurentPolynomial> coordinates;
  TwistedToricVariety target;
};

/// Coordinatewise valuation. Throws PreconditionError when every entry is zero.
std::vector<Valuation> trop_point(std::span<const PuiseuxSeries> coords);

/// Folds ∞ entries into the sedentarity cone spanned by the matching e_i.
/// Throws PreconditionError when that cone is not in the fan.
TropPoint trop_point_in_fan(std::span<const Valuation> values, const Fan& fan);

std::vector<PuiseuxSeries> evaluate_embedding(const EmbeddingData& e,
                                              std::span<const PuiseuxSeries> x);

/// Action of g on a torus point: (g·x)_i = γ_g^{-1}(x^{A_g^T e_i}).
/// With this convention trop(g·x) = A_g trop(x). Negative powers of non-monomial
/// entries use inverses truncated at `precision` past their valuation; valuations stay exact.
/// Entries must live at a level dividing the twist level.
std::vector<PuiseuxSeries> act_on_torus_point(const TwistedToricVariety& twist, int g,
                                              std::span<const PuiseuxSeries> x,
                                              const Rational& precision = Rational(8));

/// Product of the m Galois conjugates of E over Z/m acting on coefficients at level m.
/// Output coordinates are the blocks galois_twist(k, E) for k = 0..m-1, the target is the
/// m-fold product fan, and the generator shifts block k to block k+1 with residue 1.
EmbeddingData equivariantize_embedding(const EmbeddingData& e, int order);

/// Each generator permutes the coordinates, A^T e_c = e_{c'}, and conjugates them:
/// galois_twist(k_g, coordinate c) = coordinate c'.
bool check_embedding_consistency(const EmbeddingData& e);

struct OrbitImage {
  std::vector<std::vector<Valuation>> values;
  std::vector<TropPoint> images;
  bool injective = false;
  bool action_compatible = false;
};

/// Tropical images of a Galois orbit of points of X. The generator acts on X's points by
/// γ^{-1} coordinatewise, so points must live at a level dividing the twist level. Throws PreconditionError when the orbit is not closed under it.
OrbitImage orbit_image(const std::vector<std::vector<PuiseuxSeries>>& orbit,
                       const EmbeddingData& e, int generator);

}  // namespace galtrop
