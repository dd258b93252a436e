#include "galtrop/fan.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "galtrop/errors.hpp"

namespace galtrop {

namespace {

RationalVector ray_as_rational(const IntVector& r) {
  return RationalVector(r.begin(), r.end());
}

bool cone_order(const Cone& a, const Cone& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Fan::Fan(int rank, std::vector<IntVector> rays, std::vector<Cone> cones)
    : rank_(rank), rays_(std::move(rays)) {
  if (rank < 0) throw MalformedInput("negative fan rank");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (static_cast<int>(rays_[i].size()) != rank) {
      throw MalformedInput("ray " + std::to_string(i) + " has wrong dimension");
    }
    if (!is_primitive(rays_[i])) {
      throw MalformedInput("ray " + std::to_string(i) + " is not primitive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rays_[j] == rays_[i]) throw MalformedInput("duplicate ray " + std::to_string(i));
    }
  }
  std::set<Cone, decltype(&cone_order)> closed(&cone_order);
  closed.insert(Cone{});
  for (auto c : cones) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
      throw MalformedInput("cone lists a ray twice");
    }
    for (int idx : c) {
      if (idx < 0 || idx >= static_cast<int>(rays_.size())) {
        throw MalformedInput("cone references unknown ray " + std::to_string(idx));
      }
    }
    // Every subset is a face of a simplicial cone.
    const std::size_t k = c.size();
    if (k > 20) throw MalformedInput("cone too large");
    for (unsigned mask = 0; mask < (1U << k); ++mask) {
      Cone face;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1U << i)) face.push_back(c[i]);
      }
      closed.insert(face);
    }
  }
  cones_.assign(closed.begin(), closed.end());

  info_.reserve(cones_.size());
  for (const auto& c : cones_) {
    std::vector<RationalVector> cols;
    for (int idx : c) cols.push_back(ray_as_rational(rays_[idx]));
    if (QMatrix::from_columns(cols, rank_).rank() != static_cast<int>(c.size())) {
      throw MalformedInput("cone rays are not linearly independent");
    }
    ConeInfo info;
    for (int j = 0; j < rank_ && static_cast<int>(cols.size()) < rank_; ++j) {
      RationalVector e(rank_, Rational(0));
      e[j] = 1;
      cols.push_back(e);
      if (QMatrix::from_columns(cols, rank_).rank() == static_cast<int>(cols.size())) {
        info.complement.push_back(j);
      } else {
        cols.pop_back();
      }
    }
    info.basis_inverse = *QMatrix::from_columns(cols, rank_).inverse();
    info_.push_back(std::move(info));
  }
}

Fan Fan::projective_space(int n) {
  std::vector<IntVector> rays;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(n, -1));
  std::vector<Cone> cones;
  for (int omit = 0; omit <= n; ++omit) {
    Cone c;
    for (int i = 0; i <= n; ++i) {
      if (i != omit) c.push_back(i);
    }
    cones.push_back(c);
  }
  return Fan(n, std::move(rays), std::move(cones));
}

std::vector<int> Fan::maximal_cones() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cones_.size() && maximal; ++j) {
      if (cones_[j].size() > cones_[i].size() &&
          std::includes(cones_[j].begin(), cones_[j].end(), cones_[i].begin(), cones_[i].end())) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::optional<int> Fan::find_ray(std::span<const long> v) const {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (std::equal(v.begin(), v.end(), rays_[i].begin(), rays_[i].end())) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

std::optional<int> Fan::find_cone(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c, cone_order);
  if (it == cones_.end() || *it != c) return std::nullopt;
  return static_cast<int>(it - cones_.begin());
}

int Fan::cone_index(const Cone& c) const {
  auto idx = find_cone(c);
  if (!idx) throw NotFound("cone is not in the fan");
  return *idx;
}

int Fan::cone_of_rays(std::vector<int> ray_indices) const {
  std::sort(ray_indices.begin(), ray_indices.end());
  return cone_index(ray_indices);
}

bool Fan::is_smooth(int cone) const {
  try {
    lattice_basis_extending(*this, cone);
    return true;
  } catch (const UnsupportedCone&) {
    return false;
  }
}

RationalVector Fan::canonical_representative(int cone, std::span<const Rational> v) const {
  const ConeInfo& info = info_.at(cone);
  const RationalVector q = quotient_coordinates(cone, v);
  RationalVector out(rank_, Rational(0));
  for (std::size_t i = 0; i < info.complement.size(); ++i) out[info.complement[i]] = q[i];
  return out;
}

RationalVector Fan::quotient_coordinates(int cone, std::span<const Rational> v) const {
  if (static_cast<int>(v.size()) != rank_) throw MalformedInput("point has wrong dimension");
  const ConeInfo& info = info_.at(cone);
  const RationalVector all = info.basis_inverse.apply(RationalVector(v.begin(), v.end()));
  const std::size_t k = cones_[cone].size();
  return RationalVector(all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
}

RationalVector Fan::lift_quotient(int cone, std::span<const Rational> q) const {
  const ConeInfo& info = info_.at(cone);
  if (q.size() != info.complement.size()) throw MalformedInput("quotient vector has wrong length");
  RationalVector out(rank_, Rational(0));
  for (std::size_t i = 0; i < q.size(); ++i) out[info.complement[i]] = q[i];
  return out;
}

std::optional<int> map_cone(const LatticeMap& a, const Fan& fan, int cone) {
  Cone image;
  for (int r : fan.cones().at(cone)) {
    auto idx = fan.find_ray(a.apply(std::span<const long>(fan.rays()[r])));
    if (!idx) return std::nullopt;
    image.push_back(*idx);
  }
  std::sort(image.begin(), image.end());
  return fan.find_cone(image);
}

bool is_fan_automorphism(const LatticeMap& a, const Fan& fan) {
  if (a.rank() != fan.rank()) throw MalformedInput("lattice map rank does not match fan rank");
  if (!a.is_unimodular()) throw MalformedInput("lattice map is not unimodular");
  std::vector<bool> hit(fan.rays().size(), false);
  for (const auto& r : fan.rays()) {
    auto idx = fan.find_ray(a.apply(std::span<const long>(r)));
    if (!idx || hit[*idx]) return false;
    hit[*idx] = true;
  }
  std::vector<bool> cone_hit(fan.cones().size(), false);
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    auto idx = map_cone(a, fan, static_cast<int>(c));
    if (!idx || cone_hit[*idx]) return false;
    cone_hit[*idx] = true;
  }
  return true;
}

std::vector<IntVector> lattice_basis_extending(const Fan& fan, int cone) {
  const int n = fan.rank();
  const Cone& c = fan.cones().at(cone);
  const int k = static_cast<int>(c.size());
  std::vector<IntVector> rows;
  for (int r : c) rows.push_back(fan.rays()[r]);
  IntMatrix work = IntMatrix::from_rows(rows, n);
  IntMatrix u = IntMatrix::identity(n);
  auto column_combine = [&](IntMatrix& m, int dst, int src, long factor) {
    for (int r = 0; r < m.rows(); ++r) m(r, dst) -= factor * m(r, src);
  };
  auto column_swap = [](IntMatrix& m, int a, int b) {
    for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
  };
  // Unimodular column operations bring the ray matrix to [H | 0] with H lower triangular.
  for (int i = 0; i < k; ++i) {
    while (true) {
      int best = -1;
      for (int j = i; j < n; ++j) {
        if (work(i, j) != 0 && (best < 0 || std::labs(work(i, j)) < std::labs(work(i, best)))) {
          best = j;
        }
      }
      if (best < 0) throw UnsupportedCone("cone rays are linearly dependent");
      if (best != i) {
        column_swap(work, i, best);
        column_swap(u, i, best);
      }
      bool done = true;
      for (int j = i + 1; j < n; ++j) {
        if (work(i, j) == 0) continue;
        const long f = work(i, j) / work(i, i);
        column_combine(work, j, i, f);
        column_combine(u, j, i, f);
        if (work(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (std::labs(work(i, i)) != 1) throw UnsupportedCone("cone is not smooth");
  }
  const IntMatrix w = u.inverse();
  std::vector<IntVector> basis = rows;
  for (int j = k; j < n; ++j) basis.push_back(w.row(j));
  return basis;
}

std::vector<IntVector> dual_semigroup_generators(const Fan& fan, int cone) {
  const int n = fan.rank();
  const int k = fan.cone_dim(cone);
  const auto basis = lattice_basis_extending(fan, cone);
  const IntMatrix dual = IntMatrix::from_columns(basis, n).inverse();  // rows are the dual basis
  std::vector<IntVector> gens;
  for (int i = 0; i < n; ++i) {
    IntVector u = dual.row(i);
    if (i >= k) {
      IntVector neg = u;
      for (auto& x : neg) x = -x;
      gens.push_back(u);
      gens.push_back(neg);
    } else {
      gens.push_back(u);
    }
  }
  return gens;
}

int cone_of_point(std::span<const Rational> v, const Fan& fan) {
  if (static_cast<int>(v.size()) != fan.rank()) throw MalformedInput("point has wrong dimension");
  const bool is_zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  if (is_zero) return 0;
  const RationalVector target(v.begin(), v.end());
  for (std::size_t c = 1; c < fan.cones().size(); ++c) {
    std::vector<RationalVector> cols;
    for (int r : fan.cones()[c]) cols.push_back(RationalVector(fan.rays()[r].begin(), fan.rays()[r].end()));
    auto coeffs = coordinates_in(QMatrix::from_columns(cols, fan.rank()), target);
    if (!coeffs) continue;
    if (std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& x) { return x > 0; })) {
      return static_cast<int>(c);
    }
  }
  throw NotFound("point lies outside the support of the fan");
}

int cone_of_point(std::span<const long> v, const Fan& fan) {
  const RationalVector q(v.begin(), v.end());
  return cone_of_point(std::span<const Rational>(q), fan);
}

Fan product_fan(const Fan& a, const Fan& b) {
  const int n = a.rank() + b.rank();
  std::vector<IntVector> rays;
  for (const auto& r : a.rays()) {
    IntVector v = r;
    v.resize(n, 0);
    rays.push_back(v);
  }
  for (const auto& r : b.rays()) {
    IntVector v(a.rank(), 0);
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(v);
  }
  const int offset = static_cast<int>(a.rays().size());
  std::vector<Cone> cones;
  for (int ca : a.maximal_cones()) {
    for (int cb : b.maximal_cones()) {
      Cone c = a.cones()[ca];
      for (int r : b.cones()[cb]) c.push_back(r + offset);
      cones.push_back(c);
    }
  }
  return Fan(n, std::move(rays), std::move(cones));
}

bool is_complete_sampled(const Fan& fan, int radius) {
  const int n = fan.rank();
  if (n > 3) throw PreconditionError("completeness sampler supports rank <= 3");
  IntVector p(n, -radius);
  while (true) {
    try {
      cone_of_point(std::span<const long>(p), fan);
    } catch (const NotFound&) {
      return false;
    }
    int i = 0;
    while (i < n && p[i] == radius) p[i++] = -radius;
    if (i == n) return true;
    ++p[i];
  }
}

std::vector<LatticeMap> enumerate_automorphisms(const Fan& fan) {
  const int n = fan.rank();
  // Find n rays forming a basis of N (over Q; integrality is checked per candidate).
  std::vector<int> basis_rays;
  {
    std::vector<RationalVector> cols;
    for (std::size_t i = 0; i < fan.rays().size() && static_cast<int>(cols.size()) < n; ++i) {
      cols.push_back(RationalVector(fan.rays()[i].begin(), fan.rays()[i].end()));
      if (QMatrix::from_columns(cols, n).rank() == static_cast<int>(cols.size())) {
        basis_rays.push_back(static_cast<int>(i));
      } else {
        cols.pop_back();
      }
    }
  }
  if (static_cast<int>(basis_rays.size()) < n) return {LatticeMap::identity(n)};
  std::vector<IntVector> src;
  for (int r : basis_rays) src.push_back(fan.rays()[r]);
  const QMatrix src_inv = *QMatrix(IntMatrix::from_columns(src, n)).inverse();

  std::vector<LatticeMap> out;
  std::vector<int> choice(n, 0);
  std::function<void(int)> recurse = [&](int depth) {
    if (depth == n) {
      std::vector<IntVector> dst;
      for (int r : choice) dst.push_back(fan.rays()[r]);
      const QMatrix a = QMatrix(IntMatrix::from_columns(dst, n)) * src_inv;
      IntMatrix m(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (a(i, j).get_den() != 1) return;
          m(i, j) = a(i, j).get_num().get_si();
        }
      }
      if (!m.is_unimodular()) return;
      LatticeMap map(m);
      if (is_fan_automorphism(map, fan)) out.push_back(map);
      return;
    }
    for (int r = 0; r < static_cast<int>(fan.rays().size()); ++r) {
      if (std::find(choice.begin(), choice.begin() + depth, r) != choice.begin() + depth) continue;
      choice[depth] = r;
      recurse(depth + 1);
    }
  };
  recurse(0);
  return out;
}

}  // namespace galtrop
