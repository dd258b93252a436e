#pragma once

#include <compare>
#include <ostream>

#include "galtrop/fan.hpp"
#include "galtrop/lattice.hpp"
#include "galtrop/twist.hpp"

namespace galtrop {

/// Point of Trop(Y_Σ): a stratum (sedentarity cone σ) and a point of N_R/span(σ).
///
/// Coordinates hold the canonical representative in N_R (see
/// Fan::canonical_representative). Interior points have sedentarity 0, the
/// zero cone, which has index 0 in every fan.
class TropPoint {
 public:
  TropPoint() = default;
  static TropPoint interior(RationalVector coords);
  static TropPoint on_stratum(const Fan& fan, int cone, std::span<const Rational> v);

  int sedentarity() const { return sedentarity_; }
  bool is_interior() const { return sedentarity_ == 0; }
  const RationalVector& coords() const { return coords_; }

  friend bool operator==(const TropPoint& a, const TropPoint& b) = default;
  friend std::strong_ordering operator<=>(const TropPoint& a, const TropPoint& b);

 private:
  int sedentarity_ = 0;
  RationalVector coords_;
};

std::ostream& operator<<(std::ostream& os, const TropPoint& p);

/// g*: stratum σ ↦ A_g σ, coordinates pushed by A_g and re-canonicalized.
TropPoint act_on_trop_point(const TwistedToricVariety& twist, int g, const TropPoint& p);

/// Limit of basepoint + s·direction as s → ∞ in Trop(Y_Σ).
TropPoint compactify_ray(std::span<const Rational> basepoint, std::span<const long> direction,
                         const Fan& fan);

/// Min-plus image of the monomial map with exponent rows u_i: (⟨u_i, p⟩)_i.
/// Only interior points are supported.
RationalVector tropical_monomial_map(const IntMatrix& exponents, const TropPoint& p);

/// Exponent rows of the Segre map P^{n1} × P^{n2} → P^{(n1+1)(n2+1)-1} in
/// torus coordinates: the row for the pair (i, j) is e_i ⊕ e_j with e_0 = 0.
/// Pairs are listed in decreasing lexicographic order, ending with (0, 0).
IntMatrix segre_exponents(int n1, int n2);

}  // namespace galtrop
