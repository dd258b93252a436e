#include <gtest/gtest.h>

#include "galtrop/errors.hpp"
#include "galtrop/homology.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace galtrop;
using namespace galtrop::testing;

namespace {

TropicalComplex closed_line() { return close_in_toric_surface(trop_curve_2d(tropical_line()), p2_fan()); }

TropicalComplex closed_sextic() {
  return close_in_toric_surface(trop_curve_2d(brauer_severi_sextic()), p2_fan());
}

// Tropical P^1: one edge joining the two boundary points of the compactified line.
TropicalComplex closed_interval() {
  const Fan f = p1_fan();
  TropicalComplex c;
  c.rank = 1;
  c.vertices = {TropPoint::on_stratum(f, f.cone_index({1}), RationalVector{q(0)}),
                TropPoint::on_stratum(f, f.cone_index({0}), RationalVector{q(0)})};
  c.edges = {Edge{0, 1, {1}, 1}};
  c.fan = f;
  return c;
}

std::array<int, 4> flat(const HomologyReport& r) {
  return {r.dims[0][0], r.dims[0][1], r.dims[1][0], r.dims[1][1]};
}

int fixed_dimension(const QMatrix& m) { return (m - QMatrix::identity(m.rows())).kernel_basis().cols(); }

}  // namespace

TEST(MultiTangent, TropicalLineSpaces) {
  const TropicalComplex c = closed_line();
  const auto spaces = multitangent_spaces(c, 1);
  for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v) {
    EXPECT_EQ(spaces[v].basis.cols(), c.vertices[v].is_interior() ? 2 : 0);
  }
  for (std::size_t i = c.vertices.size(); i < spaces.size(); ++i) EXPECT_EQ(spaces[i].basis.cols(), 1);
  for (const auto& s : multitangent_spaces(c, 0)) EXPECT_EQ(s.basis.cols(), 1);
}

TEST(MultiTangent, EdgeSpaceIsItsDirection) {
  TropicalComplex c;
  c.vertices = {TropPoint::interior({q(1), q(1)}), TropPoint::interior({q(3), q(1)})};
  c.edges = {Edge{0, 1, {1, 0}, 1}};
  const auto spaces = multitangent_spaces(c, 1);
  ASSERT_EQ(spaces[2].basis.cols(), 1);
  EXPECT_EQ(spaces[2].basis.column(0), (RationalVector{q(1), q(0)}));
}

TEST(MultiTangent, OpenComplexRejected) {
  EXPECT_THROW(multitangent_spaces(trop_curve_2d(tropical_line()), 1), PreconditionError);
}

TEST(HomologyDims, LineIntervalAndSextic) {
  EXPECT_EQ(flat(homology_dims(closed_line())), (std::array<int, 4>{1, 0, 0, 1}));
  EXPECT_EQ(flat(homology_dims(closed_interval())), (std::array<int, 4>{1, 0, 0, 1}));
  EXPECT_EQ(flat(homology_dims(closed_sextic())), (std::array<int, 4>{1, 10, 10, 1}));
}

TEST(HomologyDims, CohomologyMatchesHomology) {
  for (const auto& c : {closed_line(), closed_interval(), closed_sextic()}) {
    const HomologyReport r = homology_dims(c);
    EXPECT_EQ(r.dims, r.cohomology_dims);
  }
}

TEST(HomologyDims, EulerCharacteristic) {
  const TropicalComplex c = closed_sextic();
  for (int p = 0; p < 2; ++p) {
    const ChainComplex cc = chain_complex(c, p);
    const HomologyReport r = homology_dims(c);
    EXPECT_EQ(cc.dim0 - cc.dim1, r.dims[p][0] - r.dims[p][1]);
  }
}

TEST(HomologyDims, DegreeZeroMatchesGraphHomology) {
  RandomData rnd(71);
  for (int trial = 0; trial < 30; ++trial) {
    const TropicalComplex c = close_in_toric_surface(trop_curve_2d(random_curve(rnd, static_cast<int>(rnd.integer(3, 10)))), p2_fan());
    const HomologyReport r = homology_dims(c);
    // Independent count: components and cycle rank of the underlying graph.
    EXPECT_EQ(r.dims[0][0], c.connected_components());
    EXPECT_EQ(r.dims[0][1], static_cast<int>(c.one_cells().size()) - static_cast<int>(c.vertices.size()) + c.connected_components());
  }
}

TEST(HomologyAction, SexticGeneratorOnH01) {
  const TropicalComplex c = closed_sextic();
  const TwistedToricVariety t = z3_twist();
  const HomologyAction a = induced_action(c, t, t.group().generators()[0], 0, 1);
  ASSERT_EQ(a.matrix.rows(), 10);
  EXPECT_FALSE(a.matrix.is_identity());
  EXPECT_TRUE(a.matrix.power(3).is_identity());
  EXPECT_EQ(a.trace, q(1));
  EXPECT_EQ(fixed_dimension(a.matrix), 4);
}

TEST(HomologyAction, ExtremeDegreesAreTrivial) {
  const TropicalComplex c = closed_sextic();
  const TwistedToricVariety t = z3_twist();
  for (auto [p, q_] : {std::pair{0, 0}, std::pair{1, 1}}) {
    const QMatrix m = induced_action(c, t, t.group().generators()[0], p, q_).matrix;
    EXPECT_EQ(m.rows(), 1);
    EXPECT_TRUE(m.is_identity());
  }
}

TEST(HomologyAction, IdentityElementActsTrivially) {
  const TropicalComplex c = closed_sextic();
  const TwistedToricVariety t = z3_twist();
  for (int p = 0; p < 2; ++p) {
    for (int q_ = 0; q_ < 2; ++q_) EXPECT_TRUE(induced_action(c, t, t.group().identity(), p, q_).matrix.is_identity());
  }
}

TEST(HomologyAction, NonEquivariantComplexRejected) {
  const LaurentPolynomial f = term(1, 0) + term(0, 1) + term(0, 0, 1);
  const TropicalComplex c = close_in_toric_surface(trop_curve_2d(f), p2_fan());
  EXPECT_THROW(induced_action(c, z3_twist(), 1, 0, 1), PreconditionError);
}

TEST(HomologyAction, ReportCharacters) {
  const HomologyReport r = homology_report(closed_sextic(), z3_twist());
  EXPECT_EQ(r.characters.at({0, 1}), (std::vector<Rational>{q(10), q(1), q(1)}));
  EXPECT_EQ(r.characters.at({0, 0}), (std::vector<Rational>{q(1), q(1), q(1)}));
  EXPECT_EQ(r.generator_action.at({1, 0}).size(), 1u);
}

TEST(HomologyProperty, SexticActionSatisfiesChainAndGroupLaws) {
  const PropertyResult r = homology_action_property(closed_sextic(), z3_twist());
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(HomologyProperty, SymmetrizedRandomCurves) {
  RandomData rnd(808);
  const std::vector<std::pair<Fan, LatticeMap>> actions{
      {p2_fan(), z3_generator()},
      {p2_fan(), LatticeMap(IntMatrix{{0, 1}, {1, 0}})},
      {p1xp1_fan(), LatticeMap(IntMatrix{{0, -1}, {1, 0}})},
      {p1xp1_fan(), LatticeMap(IntMatrix{{-1, 0}, {0, -1}})},
  };
  int checked = 0;
  for (int trial = 0; trial < 16; ++trial) {
    const auto& [fan, a] = actions[trial % actions.size()];
    int order = 1;
    while (!(a.matrix().power(order) == IntMatrix::identity(2))) ++order;
    const TwistedToricVariety t = make_twist(fan, {a}, {order}, {0}, 2);
    const LaurentPolynomial f = symmetrize(random_curve(rnd, static_cast<int>(rnd.integer(3, 5))), t);
    ASSERT_TRUE(is_invariant_hypersurface(t, f));
    const TropicalComplex c = close_in_toric_surface(trop_curve_2d(f), fan);
    ASSERT_TRUE(check_complex_equivariance(c, t)) << f;
    const PropertyResult r = homology_action_property(c, t);
    EXPECT_TRUE(r.passed) << f << ": " << r.detail;
    ++checked;
  }
  EXPECT_EQ(checked, 16);
}
