#include "galtrop/subdivision.hpp"

#include <algorithm>
#include <set>

#include "galtrop/errors.hpp"

namespace galtrop {

namespace {

long cross(const IntVector& o, const IntVector& a, const IntVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool all_collinear(std::span<const IntVector> pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i] == pts[0]) continue;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (cross(pts[0], pts[i], pts[j]) != 0) return false;
    }
    return true;
  }
  return true;
}

}  // namespace

std::vector<int> convex_hull_2d(std::span<const IntVector> points, std::span<const int> subset) {
  std::vector<int> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return points[a] < points[b]; });
  if (idx.size() < 3) return idx;
  std::vector<int> hull(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<int> Subdivision::interior_vertices(std::span<const IntVector> points) const {
  if (degenerate) return {};
  std::vector<int> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  const auto hull = convex_hull_2d(points, all);
  auto strictly_inside = [&](const IntVector& p) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const IntVector& a = points[hull[i]];
      const IntVector& b = points[hull[(i + 1) % hull.size()]];
      if (cross(a, b, p) <= 0) return false;
    }
    return true;
  };
  std::set<int> verts;
  for (const auto& cv : cell_vertices) verts.insert(cv.begin(), cv.end());
  std::vector<int> out;
  for (int v : verts) {
    if (strictly_inside(points[v])) out.push_back(v);
  }
  return out;
}

Subdivision regular_subdivision(std::span<const IntVector> points,
                                std::span<const Rational> heights) {
  if (points.size() != heights.size()) throw MalformedInput("need one height per point");
  for (const auto& p : points) {
    if (p.size() != 2) throw MalformedInput("regular_subdivision works in the plane");
  }
  const int n = static_cast<int>(points.size());
  Subdivision sub;
  if (n < 3 || all_collinear(points)) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    sub.cells.push_back(all);
    sub.degenerate = true;
    return sub;
  }

  std::set<std::vector<int>> seen;
  auto covered = [&](int i, int j, int k) {
    for (const auto& c : sub.cells) {
      if (std::binary_search(c.begin(), c.end(), i) && std::binary_search(c.begin(), c.end(), j) &&
          std::binary_search(c.begin(), c.end(), k)) {
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const long det = cross(points[i], points[j], points[k]);
        if (det == 0 || covered(i, j, k)) continue;
        // Plane z = a x + b y + c through the three lifted points (Cramer's rule).
        const Rational dx1 = points[j][0] - points[i][0], dy1 = points[j][1] - points[i][1];
        const Rational dx2 = points[k][0] - points[i][0], dy2 = points[k][1] - points[i][1];
        const Rational dz1 = heights[j] - heights[i], dz2 = heights[k] - heights[i];
        const Rational a = (dz1 * dy2 - dz2 * dy1) / det;
        const Rational b = (dx1 * dz2 - dx2 * dz1) / det;
        const Rational c = heights[i] - a * points[i][0] - b * points[i][1];
        std::vector<int> on_face;
        bool lower = true;
        for (int l = 0; l < n && lower; ++l) {
          const Rational gap = heights[l] - (a * points[l][0] + b * points[l][1] + c);
          if (gap < 0) lower = false;
          if (gap == 0) on_face.push_back(l);
        }
        if (!lower || !seen.insert(on_face).second) continue;
        sub.cell_vertices.push_back(convex_hull_2d(points, on_face));
        sub.cells.push_back(std::move(on_face));
        sub.slopes.push_back({a, b});
        sub.offsets.push_back(c);
      }
    }
  }
  return sub;
}

}  // namespace galtrop
