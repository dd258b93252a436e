#pragma once

#include <array>
#include <map>
#include <vector>

#include "galtrop/complex.hpp"
#include "galtrop/linalg.hpp"
#include "galtrop/twist.hpp"

namespace galtrop {

/// F_p of one cell. Cells are numbered vertices first, then one_cells().
/// Basis columns live in N_R for sedentarity-zero cells and in quotient
/// coordinates of N_R/span(σ) (see Fan::quotient_coordinates) for boundary vertices.
struct MultiTangentSpace {
  int cell = 0;
  bool is_vertex = true;
  QMatrix basis;
};

/// Throws PreconditionError unless the complex is closed.
std::vector<MultiTangentSpace> multitangent_spaces(const TropicalComplex& c, int p);

/// C_1(F_p) → C_0(F_p), with every one-cell oriented from lower to higher vertex index.
struct ChainComplex {
  std::vector<MultiTangentSpace> spaces;
  std::vector<int> offset;  // first coordinate of each cell inside its chain group
  int dim0 = 0;
  int dim1 = 0;
  QMatrix boundary;  // dim0 × dim1
};

ChainComplex chain_complex(const TropicalComplex& c, int p);

/// Matrices of g on C_1 and C_0: cells permuted with orientation signs, tangent vectors pushed
/// by A_g (through the stratum quotients at boundary vertices).
struct ChainMap {
  QMatrix on_c1;
  QMatrix on_c0;
};

ChainMap chain_map(const TropicalComplex& c, const TwistedToricVariety& twist, int g, int p);

struct HomologyAction {
  QMatrix matrix;
  Rational trace;
};

/// Matrix of g on a fixed basis of H_{p,q}: kernel vectors of ∂ for q = 1, a complement
/// of im ∂ for q = 0. Throws PreconditionError when the complex is not equivariant.
HomologyAction induced_action(const TropicalComplex& c, const TwistedToricVariety& twist, int g,
                              int p, int q);

/// Basis of H_{p,q} used by induced_action: columns in C_q(F_p).
QMatrix homology_basis(const TropicalComplex& c, int p, int q);

struct HomologyReport {
  std::array<std::array<int, 2>, 2> dims{};             // dims[p][q] = dim H_{p,q}
  std::array<std::array<int, 2>, 2> cohomology_dims{};  // from the transposed complex
  /// (p, q) → one matrix per group generator.
  std::map<std::pair<int, int>, std::vector<QMatrix>> generator_action;
  /// (p, q) → trace for every group element, in element order.
  std::map<std::pair<int, int>, std::vector<Rational>> characters;
};

HomologyReport homology_dims(const TropicalComplex& c);

/// homology_dims plus the induced representation of the twist's group.
HomologyReport homology_report(const TropicalComplex& c, const TwistedToricVariety& twist);

}  // namespace galtrop
