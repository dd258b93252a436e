#pragma once

#include <set>
#include <span>

#include "galtrop/laurent.hpp"

namespace galtrop {

/// Exponents u attaining min_u val(a_u) + ⟨u, v⟩: the support of the initial form in_v(f).
std::set<IntVector> groebner_cell(const LaurentPolynomial& f, std::span<const Rational> v);

/// Transports an argmin set by the character action of g (u ↦ A_g^{-T} u),
/// so that groebner_cell(f, A_g v) = map_groebner_cell(T, g, groebner_cell(f, v)) for invariant f.
std::set<IntVector> map_groebner_cell(const TwistedToricVariety& twist, int g,
                                      const std::set<IntVector>& cell);

}  // namespace galtrop
