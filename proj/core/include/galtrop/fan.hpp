#pragma once

#include <optional>
#include <vector>

#include "galtrop/lattice.hpp"
#include "galtrop/linalg.hpp"
#include "galtrop/rational.hpp"

namespace galtrop {

/// Sorted ray indices; the empty set is the zero cone.
using Cone = std::vector<int>;

/// Simplicial rational fan in N_R = R^rank.
///
/// Cones are closed under faces at construction and kept in a canonical order
/// (by dimension, then lexicographically), so cone index 0 is always the zero
/// cone. Every cone also carries a fixed complement of span(σ) made of
/// standard basis vectors; points of the stratum N_R/span(σ) are stored as
/// their projection onto that complement.
class Fan {
 public:
  Fan() : Fan(0, {}, {}) {}
  /// `cones` may list only generating (e.g. maximal) cones.
  Fan(int rank, std::vector<IntVector> rays, std::vector<Cone> cones);

  /// Rays e_1..e_n and -(e_1+...+e_n); maximal cones omit one ray each.
  static Fan projective_space(int n);
  /// The rank-0 fan {0}; unit for product_fan.
  static Fan point() { return Fan(); }

  int rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<Cone>& cones() const { return cones_; }
  int cone_dim(int cone) const { return static_cast<int>(cones_.at(cone).size()); }
  std::vector<int> maximal_cones() const;

  std::optional<int> find_ray(std::span<const long> v) const;
  std::optional<int> find_cone(const Cone& c) const;
  int cone_index(const Cone& c) const;
  /// The cone spanned by the given ray indices (any order); throws NotFound.
  int cone_of_rays(std::vector<int> ray_indices) const;

  /// Rays extend to a Z-basis of N.
  bool is_smooth(int cone) const;
  /// Standard basis indices j with span(σ) ⊕ span(e_j) = N_R.
  const std::vector<int>& complement_basis(int cone) const { return info_.at(cone).complement; }

  /// Projection of v along span(σ) onto the complement; canonical stratum representative.
  RationalVector canonical_representative(int cone, std::span<const Rational> v) const;
  /// Coordinates of the class of v in N_R/span(σ) w.r.t. the complement basis.
  RationalVector quotient_coordinates(int cone, std::span<const Rational> v) const;
  /// Inverse of quotient_coordinates restricted to the complement.
  RationalVector lift_quotient(int cone, std::span<const Rational> q) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
  }

 private:
  struct ConeInfo {
    std::vector<int> complement;
    QMatrix basis_inverse;  // inverse of [rays | complement vectors]
  };

  int rank_;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
  std::vector<ConeInfo> info_;
};

/// Image of a cone under A, if it is a cone of the fan.
std::optional<int> map_cone(const LatticeMap& a, const Fan& fan, int cone);

/// A maps rays bijectively onto rays and cones onto cones.
/// Throws MalformedInput when A is not unimodular.
bool is_fan_automorphism(const LatticeMap& a, const Fan& fan);

/// Rays of σ followed by a completion to a Z-basis of N; throws UnsupportedCone if σ is not smooth.
std::vector<IntVector> lattice_basis_extending(const Fan& fan, int cone);

/// Generators of S_σ = σ^∨ ∩ M for smooth σ: the duals of σ's rays and ± the
/// remaining dual basis vectors.
std::vector<IntVector> dual_semigroup_generators(const Fan& fan, int cone);

/// Unique cone with v in its relative interior; throws NotFound outside the support.
int cone_of_point(std::span<const Rational> v, const Fan& fan);
int cone_of_point(std::span<const long> v, const Fan& fan);

Fan product_fan(const Fan& a, const Fan& b);

/// Checks that every integer point of [-radius, radius]^n lies in some cone (rank ≤ 3).
bool is_complete_sampled(const Fan& fan, int radius = 4);

/// All of Aut(Σ), found by sending a ray basis of N to ordered ray tuples.
std::vector<LatticeMap> enumerate_automorphisms(const Fan& fan);

}  // namespace galtrop
