#include "galtrop/homology.hpp"

#include <algorithm>

#include "galtrop/errors.hpp"

namespace galtrop {

namespace {

void require_closed(const TropicalComplex& c) {
  if (!c.is_closed()) throw PreconditionError("complex has uncapped rays");
  for (const auto& v : c.vertices) {
    if (!v.is_interior() && !c.fan) throw PreconditionError("boundary vertices need an ambient fan");
  }
}

std::pair<int, int> oriented(const Edge& e) { return {std::min(e.tail, e.head), std::max(e.tail, e.head)}; }

QMatrix span_basis(const std::vector<RationalVector>& vectors, int dim) {
  if (vectors.empty()) return QMatrix(dim, 0);
  std::vector<int> pivots;
  QMatrix::from_columns(vectors, dim).rref(&pivots);
  std::vector<RationalVector> chosen;
  for (int p : pivots) chosen.push_back(vectors[p]);
  return QMatrix::from_columns(chosen, dim);
}

// Image of an N_R vector in the tangent coordinates of vertex v.
RationalVector to_vertex_coords(const TropicalComplex& c, int v, const RationalVector& x) {
  const TropPoint& p = c.vertices[v];
  if (p.is_interior()) return x;
  return c.fan->quotient_coordinates(p.sedentarity(), x);
}

RationalVector coords_or_throw(const QMatrix& basis, const RationalVector& v) {
  auto x = coordinates_in(basis, v);
  if (!x) throw PreconditionError("tangent vector leaves the multi-tangent space");
  return *x;
}

int vertex_ambient_dim(const TropicalComplex& c, int v) {
  const TropPoint& p = c.vertices[v];
  return p.is_interior() ? c.rank : c.rank - c.fan->cone_dim(p.sedentarity());
}

}  // namespace

std::vector<MultiTangentSpace> multitangent_spaces(const TropicalComplex& c, int p) {
  if (p != 0 && p != 1) throw PreconditionError("only F_0 and F_1 exist on curves");
  require_closed(c);
  const auto cells = c.one_cells();
  const int nv = static_cast<int>(c.vertices.size());
  std::vector<MultiTangentSpace> out;
  if (p == 0) {
    QMatrix one(1, 1);
    one(0, 0) = 1;
    for (int i = 0; i < nv + static_cast<int>(cells.size()); ++i) out.push_back({i, i < nv, one});
    return out;
  }
  std::vector<std::vector<RationalVector>> adjacent(nv);
  for (const auto& e : cells) {
    const RationalVector d = to_rational_vector(e.direction);
    adjacent[e.tail].push_back(to_vertex_coords(c, e.tail, d));
    adjacent[e.head].push_back(to_vertex_coords(c, e.head, d));
  }
  for (int v = 0; v < nv; ++v) {
    out.push_back({v, true, span_basis(adjacent[v], vertex_ambient_dim(c, v))});
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out.push_back({nv + static_cast<int>(i), false, span_basis({to_rational_vector(cells[i].direction)}, c.rank)});
  }
  return out;
}

ChainComplex chain_complex(const TropicalComplex& c, int p) {
  ChainComplex cc;
  cc.spaces = multitangent_spaces(c, p);
  const int nv = static_cast<int>(c.vertices.size());
  for (std::size_t i = 0; i < cc.spaces.size(); ++i) {
    int& dim = cc.spaces[i].is_vertex ? cc.dim0 : cc.dim1;
    cc.offset.push_back(dim);
    dim += cc.spaces[i].basis.cols();
  }
  cc.boundary = QMatrix(cc.dim0, cc.dim1);
  const auto cells = c.one_cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int cell = nv + static_cast<int>(i);
    const QMatrix& be = cc.spaces[cell].basis;
    const auto [lo, hi] = oriented(cells[i]);
    for (int j = 0; j < be.cols(); ++j) {
      const RationalVector x = be.column(j);
      for (const auto& [v, sign] : {std::pair{hi, 1}, std::pair{lo, -1}}) {
        const RationalVector y =
            p == 0 ? x : coords_or_throw(cc.spaces[v].basis, to_vertex_coords(c, v, x));
        for (std::size_t k = 0; k < y.size(); ++k) {
          cc.boundary(cc.offset[v] + static_cast<int>(k), cc.offset[cell] + j) += sign * y[k];
        }
      }
    }
  }
  return cc;
}

ChainMap chain_map(const TropicalComplex& c, const TwistedToricVariety& twist, int g, int p) {
  const auto cm = cell_map(c, twist, g);
  if (!cm) throw PreconditionError("complex is not equivariant under the group action");
  const ChainComplex cc = chain_complex(c, p);
  const LatticeMap& a = twist.action(g);
  const int nv = static_cast<int>(c.vertices.size());
  ChainMap out{QMatrix(cc.dim1, cc.dim1), QMatrix(cc.dim0, cc.dim0)};

  auto push = [&](int cell, int image_cell, const RationalVector& x) -> RationalVector {
    if (p == 0) return x;
    if (cell >= nv || c.vertices[cell].is_interior()) {
      return coords_or_throw(cc.spaces[image_cell].basis, a.apply(std::span<const Rational>(x)));
    }
    const int sigma = c.vertices[cell].sedentarity();
    const int tau = c.vertices[image_cell].sedentarity();
    const RationalVector lifted = c.fan->lift_quotient(sigma, x);
    const RationalVector moved = a.apply(std::span<const Rational>(lifted));
    return coords_or_throw(cc.spaces[image_cell].basis, c.fan->quotient_coordinates(tau, moved));
  };

  for (int v = 0; v < nv; ++v) {
    const int w = cm->vertex[v];
    const QMatrix& b = cc.spaces[v].basis;
    for (int j = 0; j < b.cols(); ++j) {
      const RationalVector y = push(v, w, b.column(j));
      for (std::size_t k = 0; k < y.size(); ++k) out.on_c0(cc.offset[w] + static_cast<int>(k), cc.offset[v] + j) = y[k];
    }
  }
  const auto cells = c.one_cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int cell = nv + static_cast<int>(i);
    const int image = nv + cm->one_cell[i];
    const int lo = oriented(cells[i]).first;
    const int sign = cm->vertex[lo] == oriented(cells[cm->one_cell[i]]).first ? 1 : -1;
    const QMatrix& b = cc.spaces[cell].basis;
    for (int j = 0; j < b.cols(); ++j) {
      const RationalVector y = push(cell, image, b.column(j));
      for (std::size_t k = 0; k < y.size(); ++k) {
        out.on_c1(cc.offset[image] + static_cast<int>(k), cc.offset[cell] + j) = sign * y[k];
      }
    }
  }
  return out;
}

namespace {

// Standard basis vectors completing the column span of `image` to all of Q^n.
QMatrix complement_of_image(const QMatrix& image) {
  const int n = image.rows();
  std::vector<int> pivots;
  image.hstack(QMatrix::identity(n)).rref(&pivots);
  std::vector<RationalVector> cols;
  for (int p : pivots) {
    if (p < image.cols()) continue;
    RationalVector e(n, Rational(0));
    e[p - image.cols()] = 1;
    cols.push_back(std::move(e));
  }
  return QMatrix::from_columns(cols, n);
}

QMatrix basis_for(const ChainComplex& cc, int q) {
  return q == 1 ? cc.boundary.kernel_basis() : complement_of_image(cc.boundary);
}

}  // namespace

QMatrix homology_basis(const TropicalComplex& c, int p, int q) {
  return basis_for(chain_complex(c, p), q);
}

namespace {

HomologyAction action_on(const ChainComplex& cc, const ChainMap& phi, const QMatrix& basis, int q) {
  QMatrix x;
  if (q == 1) {
    auto solved = basis.solve(phi.on_c1 * basis);
    if (!solved) throw PreconditionError("chain map does not preserve cycles");
    x = *solved;
  } else {
    const QMatrix system = basis.hstack(cc.boundary);
    auto solved = system.solve(phi.on_c0 * basis);
    if (!solved) throw PreconditionError("chain map image not expressible in homology");
    x = QMatrix(basis.cols(), basis.cols());
    for (int r = 0; r < basis.cols(); ++r) {
      for (int col = 0; col < basis.cols(); ++col) x(r, col) = (*solved)(r, col);
    }
  }
  return {x, x.trace()};
}

}  // namespace

HomologyAction induced_action(const TropicalComplex& c, const TwistedToricVariety& twist, int g,
                              int p, int q) {
  if (q != 0 && q != 1) throw PreconditionError("curves have homology in degrees 0 and 1");
  const ChainComplex cc = chain_complex(c, p);
  return action_on(cc, chain_map(c, twist, g, p), basis_for(cc, q), q);
}

HomologyReport homology_dims(const TropicalComplex& c) {
  HomologyReport r;
  for (int p = 0; p < 2; ++p) {
    const ChainComplex cc = chain_complex(c, p);
    const int rank = cc.boundary.rank();
    r.dims[p][1] = cc.dim1 - rank;
    r.dims[p][0] = cc.dim0 - rank;
    // Cochains: δ = ∂^T : C^0 → C^1, so H^{p,0} = ker δ and H^{p,1} = coker δ.
    const QMatrix delta = cc.boundary.transpose();
    r.cohomology_dims[p][0] = delta.kernel_basis().cols();
    r.cohomology_dims[p][1] = cc.dim1 - delta.rank();
  }
  return r;
}

HomologyReport homology_report(const TropicalComplex& c, const TwistedToricVariety& twist) {
  HomologyReport r = homology_dims(c);
  const auto gens = twist.group().generators();
  for (int p = 0; p < 2; ++p) {
    const ChainComplex cc = chain_complex(c, p);
    std::vector<ChainMap> maps;
    for (int g = 0; g < twist.group().size(); ++g) maps.push_back(chain_map(c, twist, g, p));
    for (int q = 0; q < 2; ++q) {
      const QMatrix basis = basis_for(cc, q);
      std::vector<Rational> traces;
      for (int g = 0; g < twist.group().size(); ++g) traces.push_back(action_on(cc, maps[g], basis, q).trace);
      std::vector<QMatrix> mats;
      for (int g : gens) mats.push_back(action_on(cc, maps[g], basis, q).matrix);
      r.characters[{p, q}] = std::move(traces);
      r.generator_action[{p, q}] = std::move(mats);
    }
  }
  return r;
}

}  // namespace galtrop
