#include "galtrop/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "galtrop/errors.hpp"

namespace galtrop {

namespace {

RationalVector sub(std::span<const Rational> a, std::span<const Rational> b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector along(std::span<const Rational> p, std::span<const Rational> d, const Rational& s) {
  RationalVector out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + s * d[i];
  return out;
}

RationalVector as_rational(std::span<const long> v) { return RationalVector(v.begin(), v.end()); }

long lattice_length(const IntVector& a, const IntVector& b) {
  return std::abs(std::gcd(b[0] - a[0], b[1] - a[1]));
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

class VertexIndex {
 public:
  explicit VertexIndex(TropicalComplex& c) : c_(c) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) index_.emplace(c.vertices[i], static_cast<int>(i));
  }
  int get_or_add(const TropPoint& p) {
    auto [it, inserted] = index_.try_emplace(p, static_cast<int>(c_.vertices.size()));
    if (inserted) c_.vertices.push_back(p);
    return it->second;
  }

 private:
  TropicalComplex& c_;
  std::map<TropPoint, int> index_;
};

// Parameters s in (0, s_max) (s_max empty: unbounded) where p + s·d meets a wall of the rank-2 fan.
std::vector<Rational> wall_crossings(std::span<const Rational> p, std::span<const Rational> d,
                                     const std::optional<Rational>& s_max, const Fan& fan) {
  std::vector<Rational> out;
  auto accept = [&](const Rational& s) {
    if (s > 0 && (!s_max || s < *s_max)) out.push_back(s);
  };
  for (const auto& r : fan.rays()) {
    const Rational det = Rational(r[0]) * d[1] - Rational(d[0]) * r[1];
    if (det != 0) {
      const Rational s = (p[0] * r[1] - r[0] * p[1]) / det;
      const Rational lambda = (p[0] * d[1] - d[0] * p[1]) / det;
      if (lambda >= 0) accept(s);
    } else if (p[0] * d[1] - p[1] * d[0] == 0) {
      // Parallel to the wall and through the origin: only the apex splits cells.
      const Rational dd = d[0] * d[0] + d[1] * d[1];
      accept(Rational(-(p[0] * d[0] + p[1] * d[1]) / dd));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool TropicalComplex::is_closed() const {
  return std::all_of(rays.begin(), rays.end(), [](const Ray& r) { return r.boundary.has_value(); });
}

std::vector<Edge> TropicalComplex::one_cells() const {
  std::vector<Edge> out = edges;
  for (const auto& r : rays) {
    if (r.boundary) out.push_back(Edge{r.vertex, *r.boundary, r.direction, r.weight});
  }
  return out;
}

int TropicalComplex::connected_components() const {
  DisjointSets ds(static_cast<int>(vertices.size()));
  int components = static_cast<int>(vertices.size());
  for (const auto& e : one_cells()) {
    if (ds.unite(e.tail, e.head)) --components;
  }
  return components;
}

int TropicalComplex::first_betti_number() const {
  const int e = static_cast<int>(one_cells().size());
  return e - static_cast<int>(vertices.size()) + connected_components();
}

int TropicalComplex::boundary_vertex_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](const TropPoint& p) { return !p.is_interior(); }));
}

NewtonSubdivision newton_subdivision(const LaurentPolynomial& f) {
  if (f.rank() != 2) throw PreconditionError("plane curves need a rank-2 polynomial");
  NewtonSubdivision out;
  for (const auto& [u, c] : f.terms()) {
    out.exponents.push_back(u);
    out.heights.push_back(c.valuation().value());
  }
  out.subdivision = regular_subdivision(out.exponents, out.heights);
  return out;
}

namespace {

// Collinear support: the curve is a union of parallel classical lines, one per
// lower-hull segment of the lifted points.
TropicalComplex degenerate_curve(const NewtonSubdivision& ns) {
  TropicalComplex c;
  const auto& pts = ns.exponents;
  const auto& h = ns.heights;
  std::size_t far = 1;
  while (far < pts.size() && pts[far] == pts[0]) ++far;
  const IntVector dir = primitive_of(IntVector{pts[far][0] - pts[0][0], pts[far][1] - pts[0][1]});
  std::vector<std::pair<long, int>> order;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    order.emplace_back(dir[0] * (pts[i][0] - pts[0][0]) + dir[1] * (pts[i][1] - pts[0][1]),
                       static_cast<int>(i));
  }
  std::sort(order.begin(), order.end());
  // Lower hull of (position, height).
  std::vector<std::pair<long, int>> hull;
  for (const auto& item : order) {
    while (hull.size() >= 2) {
      const auto& [x1, i1] = hull[hull.size() - 2];
      const auto& [x2, i2] = hull[hull.size() - 1];
      const Rational lhs = (h[i2] - h[i1]) * (item.first - x1);
      const Rational rhs = (h[item.second] - h[i1]) * (x2 - x1);
      if (lhs >= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(item);
  }
  const IntVector normal{-dir[1], dir[0]};
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const IntVector& a = pts[hull[k].second];
    const IntVector& b = pts[hull[k + 1].second];
    // Line {v : <b - a, v> = h_a - h_b}; base point is its closest point to the origin.
    const Rational rhs = h[hull[k].second] - h[hull[k + 1].second];
    const long bx = b[0] - a[0], by = b[1] - a[1];
    const Rational scale = rhs / (bx * bx + by * by);
    const int v = static_cast<int>(c.vertices.size());
    c.vertices.push_back(TropPoint::interior({Rational(scale * bx), Rational(scale * by)}));
    const int w = static_cast<int>(lattice_length(a, b));
    c.rays.push_back(Ray{v, normal, w, std::nullopt});
    c.rays.push_back(Ray{v, IntVector{-normal[0], -normal[1]}, w, std::nullopt});
  }
  return c;
}

}  // namespace

TropicalComplex trop_curve_2d(const LaurentPolynomial& f) {
  if (f.rank() != 2) throw PreconditionError("plane curves need a rank-2 polynomial");
  if (f.size() < 2) return TropicalComplex{};
  const NewtonSubdivision ns = newton_subdivision(f);
  if (ns.subdivision.degenerate) return degenerate_curve(ns);

  const Subdivision& sd = ns.subdivision;
  const auto& pts = ns.exponents;
  TropicalComplex c;
  for (const auto& slope : sd.slopes) {
    c.vertices.push_back(TropPoint::interior({Rational(-slope[0]), Rational(-slope[1])}));
  }
  // Subdivision edge (a, b) with a < b -> cells containing it.
  std::map<std::pair<int, int>, std::vector<int>> edge_cells;
  for (std::size_t cell = 0; cell < sd.cell_vertices.size(); ++cell) {
    const auto& poly = sd.cell_vertices[cell];
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const int a = poly[i], b = poly[(i + 1) % poly.size()];
      edge_cells[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(cell));
    }
  }
  for (std::size_t cell = 0; cell < sd.cell_vertices.size(); ++cell) {
    const auto& poly = sd.cell_vertices[cell];
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const int a = poly[i], b = poly[(i + 1) % poly.size()];
      const auto& owners = edge_cells.at({std::min(a, b), std::max(a, b)});
      const int w = static_cast<int>(lattice_length(pts[a], pts[b]));
      if (owners.size() == 1) {
        // Inner normal of a counter-clockwise polygon edge a -> b.
        const IntVector normal =
            primitive_of(IntVector{-(pts[b][1] - pts[a][1]), pts[b][0] - pts[a][0]});
        c.rays.push_back(Ray{static_cast<int>(cell), normal, w, std::nullopt});
      } else if (owners[0] == static_cast<int>(cell)) {
        const int other = owners[1];
        const RationalVector diff = sub(c.vertices[other].coords(), c.vertices[cell].coords());
        c.edges.push_back(Edge{static_cast<int>(cell), other, primitive_direction(diff), w});
      }
    }
  }
  return c;
}

TropicalComplex close_in_toric_surface(const TropicalComplex& input, const Fan& fan) {
  if (fan.rank() != 2 || input.rank != 2) throw PreconditionError("closure needs a rank-2 fan");
  if (!is_complete_sampled(fan)) throw PreconditionError("fan is not complete");

  TropicalComplex out;
  out.rank = 2;
  out.vertices = input.vertices;
  VertexIndex index(out);

  for (const auto& e : input.edges) {
    const RationalVector& p = input.vertices[e.tail].coords();
    const RationalVector d = sub(input.vertices[e.head].coords(), p);
    int prev = e.tail;
    for (const Rational& s : wall_crossings(p, d, Rational(1), fan)) {
      const int v = index.get_or_add(TropPoint::interior(along(p, d, s)));
      out.edges.push_back(Edge{prev, v, e.direction, e.weight});
      prev = v;
    }
    out.edges.push_back(Edge{prev, e.head, e.direction, e.weight});
  }
  for (const auto& r : input.rays) {
    if (r.boundary) {
      out.rays.push_back(r);
      continue;
    }
    const RationalVector& p = out.vertices[r.vertex].coords();
    const RationalVector d = as_rational(r.direction);
    int prev = r.vertex;
    const RationalVector base = p;
    for (const Rational& s : wall_crossings(base, d, std::nullopt, fan)) {
      const int v = index.get_or_add(TropPoint::interior(along(base, d, s)));
      out.edges.push_back(Edge{prev, v, r.direction, r.weight});
      prev = v;
    }
    const TropPoint cap = compactify_ray(base, r.direction, fan);
    const int b = index.get_or_add(cap);
    out.rays.push_back(Ray{prev, r.direction, r.weight, b});
  }
  out.fan = fan;
  return out;
}

std::optional<CellMap> cell_map(const TropicalComplex& c, const TwistedToricVariety& twist, int g) {
  CellMap m;
  std::map<TropPoint, int> where;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) where.emplace(c.vertices[i], static_cast<int>(i));
  for (const auto& v : c.vertices) {
    auto it = where.find(act_on_trop_point(twist, g, v));
    if (it == where.end()) return std::nullopt;
    m.vertex.push_back(it->second);
  }
  const LatticeMap& a = twist.action(g);
  const auto cells = c.one_cells();
  // Parallel one-cells may share both endpoints (rays meeting at a torus-fixed point), so the
  // direction is part of the key.
  std::map<std::tuple<int, int, IntVector>, int> by_ends;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    by_ends.emplace(std::tuple{cells[i].tail, cells[i].head, cells[i].direction}, static_cast<int>(i));
  }
  for (const auto& e : cells) {
    const int from = m.vertex[e.tail], to = m.vertex[e.head];
    const IntVector d = a.apply(std::span<const long>(e.direction));
    int sign = 1;
    auto it = by_ends.find({from, to, d});
    if (it == by_ends.end()) {
      IntVector back = d;
      for (auto& x : back) x = -x;
      it = by_ends.find({to, from, back});
      sign = -1;
    }
    if (it == by_ends.end() || cells[it->second].weight != e.weight) return std::nullopt;
    m.one_cell.push_back(it->second);
    m.one_cell_sign.push_back(sign);
  }
  for (const auto& r : c.rays) {
    if (r.boundary) continue;
    const IntVector d = a.apply(std::span<const long>(r.direction));
    int found = -1;
    for (std::size_t j = 0; j < c.rays.size(); ++j) {
      const Ray& s = c.rays[j];
      if (!s.boundary && s.vertex == m.vertex[r.vertex] && s.direction == d && s.weight == r.weight) {
        found = static_cast<int>(j);
        break;
      }
    }
    if (found < 0) return std::nullopt;
    m.ray.push_back(found);
  }
  return m;
}

std::optional<EquivarianceViolation> find_equivariance_violation(
    const TropicalComplex& c, const TwistedToricVariety& twist) {
  if (c.fan && !(*c.fan == twist.fan())) {
    throw PreconditionError("complex was closed in a different fan");
  }
  const auto cells = c.one_cells();
  for (int g : twist.group().generators()) {
    std::map<TropPoint, int> where;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) where.emplace(c.vertices[i], static_cast<int>(i));
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      if (!where.contains(act_on_trop_point(twist, g, c.vertices[i]))) {
        return EquivarianceViolation{g, "vertex", static_cast<int>(i)};
      }
    }
    if (!cell_map(c, twist, g)) {
      // Vertices match, so some edge or ray has no image; locate it.
      const LatticeMap& a = twist.action(g);
      std::set<std::tuple<int, int, IntVector, int>> keys;
      for (const auto& e : cells) keys.emplace(e.tail, e.head, e.direction, e.weight);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const int from = where.at(act_on_trop_point(twist, g, c.vertices[cells[i].tail]));
        const int to = where.at(act_on_trop_point(twist, g, c.vertices[cells[i].head]));
        IntVector d = a.apply(std::span<const long>(cells[i].direction));
        const bool forward = keys.contains({from, to, d, cells[i].weight});
        for (auto& x : d) x = -x;
        if (!forward && !keys.contains({to, from, d, cells[i].weight})) {
          return EquivarianceViolation{g, "edge", static_cast<int>(i)};
        }
      }
      return EquivarianceViolation{g, "ray", 0};
    }
  }
  return std::nullopt;
}

bool check_complex_equivariance(const TropicalComplex& c, const TwistedToricVariety& twist) {
  return !find_equivariance_violation(c, twist).has_value();
}

std::vector<std::vector<int>> one_cell_orbits(const TropicalComplex& c,
                                              const TwistedToricVariety& twist) {
  const int n = static_cast<int>(c.one_cells().size());
  DisjointSets ds(n);
  for (int g = 0; g < twist.group().size(); ++g) {
    auto m = cell_map(c, twist, g);
    if (!m) continue;
    for (int i = 0; i < n; ++i) ds.unite(i, m->one_cell[i]);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[ds.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool support_contains(const TropicalComplex& c, std::span<const Rational> v) {
  auto on_segment = [&](std::span<const Rational> p, std::span<const long> d, bool bounded,
                        std::span<const Rational> q) {
    // v = p + s d with s >= 0 (and s <= 1 along the bounded difference q - p).
    const RationalVector diff = sub(v, p);
    if (diff[0] * d[1] - diff[1] * d[0] != 0) return false;
    const Rational along_d = diff[0] * d[0] + diff[1] * d[1];
    if (along_d < 0) return false;
    if (!bounded) return true;
    const RationalVector span = sub(q, p);
    return along_d <= span[0] * d[0] + span[1] * d[1];
  };
  for (const auto& p : c.vertices) {
    if (p.is_interior() && std::equal(v.begin(), v.end(), p.coords().begin())) return true;
  }
  for (const auto& e : c.edges) {
    if (on_segment(c.vertices[e.tail].coords(), e.direction, true, c.vertices[e.head].coords())) {
      return true;
    }
  }
  for (const auto& r : c.rays) {
    if (on_segment(c.vertices[r.vertex].coords(), r.direction, false, {})) return true;
  }
  return false;
}

}  // namespace galtrop
