#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galtrop/extended.hpp"
#include "galtrop/fan.hpp"
#include "galtrop/laurent.hpp"
#include "galtrop/subdivision.hpp"
#include "galtrop/twist.hpp"

namespace galtrop {

/// Bounded edge from `tail` to `head`; `direction` is primitive and points from tail to head.
struct Edge {
  int tail = 0;
  int head = 0;
  IntVector direction;
  int weight = 1;
};

/// Unbounded ray; `boundary` is the vertex capping it once the complex is closed.
struct Ray {
  int vertex = 0;
  IntVector direction;
  int weight = 1;
  std::optional<int> boundary;
};

/// Weighted polyhedral 1-complex in N_R or in its compactification Trop(Y_Σ).
struct TropicalComplex {
  int rank = 2;
  std::vector<TropPoint> vertices;
  std::vector<Edge> edges;
  std::vector<Ray> rays;
  /// Set by close_in_toric_surface; boundary vertex strata refer to it.
  std::optional<Fan> fan;

  bool is_closed() const;
  /// Bounded edges followed by capped rays, all as edges.
  std::vector<Edge> one_cells() const;
  int first_betti_number() const;
  int connected_components() const;
  int boundary_vertex_count() const;
};

/// Exponents, heights and regular subdivision of the Newton polygon of f.
struct NewtonSubdivision {
  std::vector<IntVector> exponents;
  std::vector<Rational> heights;
  Subdivision subdivision;
};

NewtonSubdivision newton_subdivision(const LaurentPolynomial& f);

/// Tropical curve of f (rank 2): the 1-complex dual to the regular subdivision
/// of its Newton polygon, with lattice-length weights. Single-term input gives an empty complex.
TropicalComplex trop_curve_2d(const LaurentPolynomial& f);

/// Splits cells along the walls of Σ and caps every ray at its boundary point.
/// Throws PreconditionError unless Σ is a complete rank-2 fan.
TropicalComplex close_in_toric_surface(const TropicalComplex& c, const Fan& fan);

/// Image of every cell under one group element.
struct CellMap {
  std::vector<int> vertex;
  std::vector<int> one_cell;       // indexes one_cells()
  std::vector<int> one_cell_sign;  // +1 if orientation is kept
  std::vector<int> ray;            // uncapped rays
};

struct EquivarianceViolation {
  int generator = 0;
  std::string cell_kind;  // "vertex", "edge" or "ray"
  int cell = 0;
};

std::optional<CellMap> cell_map(const TropicalComplex& c, const TwistedToricVariety& twist, int g);

std::optional<EquivarianceViolation> find_equivariance_violation(const TropicalComplex& c,
                                                                 const TwistedToricVariety& twist);

/// Every generator maps the set of cells onto itself, weights included.
bool check_complex_equivariance(const TropicalComplex& c, const TwistedToricVariety& twist);

/// Orbits of one_cells() under the whole group (each orbit sorted, orbits ordered by minimum).
std::vector<std::vector<int>> one_cell_orbits(const TropicalComplex& c,
                                              const TwistedToricVariety& twist);

/// Exact membership of an interior point in the support of the complex.
bool support_contains(const TropicalComplex& c, std::span<const Rational> v);

}  // namespace galtrop
