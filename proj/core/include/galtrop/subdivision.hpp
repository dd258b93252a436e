#pragma once

#include <span>
#include <vector>

#include "galtrop/lattice.hpp"
#include "galtrop/rational.hpp"

namespace galtrop {

/// Regular subdivision of a planar point configuration induced by heights.
struct Subdivision {
  /// Every lifted point on each lower facet, sorted.
  std::vector<std::vector<int>> cells;
  /// Polygon vertices of each cell in counter-clockwise order.
  std::vector<std::vector<int>> cell_vertices;
  /// Lower facet of cell c is z = slopes[c]·(x, y) + offsets[c].
  std::vector<RationalVector> slopes;
  std::vector<Rational> offsets;
  /// Set when the points are collinear; `cells` is then the single full cell.
  bool degenerate = false;

  /// Points that are a vertex of some cell and lie in the interior of the convex hull.
  std::vector<int> interior_vertices(std::span<const IntVector> points) const;
};

/// Lower convex hull subdivision of the lifted points (p_i, h_i) ⊂ Z² × Q.
Subdivision regular_subdivision(std::span<const IntVector> points,
                                std::span<const Rational> heights);

/// Counter-clockwise convex hull of planar integer points, collinear points dropped.
std::vector<int> convex_hull_2d(std::span<const IntVector> points, std::span<const int> subset);

}  // namespace galtrop
