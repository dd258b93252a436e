#include <gtest/gtest.h>

#include <set>

#include "galtrop/errors.hpp"
#include "galtrop/fan.hpp"
#include "galtrop/linalg.hpp"
#include "support/fixtures.hpp"

using namespace galtrop;
using galtrop::testing::q;
using galtrop::testing::RandomData;

TEST(Lattice, PrimitiveVectors) {
  EXPECT_EQ(primitive_of(IntVector{4, -6}), (IntVector{2, -3}));
  EXPECT_TRUE(is_primitive(IntVector{3, 5}));
  EXPECT_FALSE(is_primitive(IntVector{0, 0}));
  EXPECT_EQ(primitive_direction(RationalVector{q(1, 2), q(-3, 4)}), (IntVector{2, -3}));
}

TEST(Lattice, DeterminantInverseAndPower) {
  const IntMatrix a{{0, -1}, {1, -1}};
  EXPECT_EQ(a.determinant(), 1);
  EXPECT_EQ(a.power(3), IntMatrix::identity(2));
  EXPECT_NE(a.power(2), IntMatrix::identity(2));
  EXPECT_EQ(a * a.inverse(), IntMatrix::identity(2));
  EXPECT_THROW((void)IntMatrix({{2, 0}, {0, 1}}).inverse(), MalformedInput);
  const IntMatrix b{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(b.determinant(), 18);
}

TEST(Linalg, RankKernelAndSolve) {
  QMatrix m(2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  EXPECT_EQ(m.rank(), 1);
  const QMatrix k = m.kernel_basis();
  EXPECT_EQ(k.cols(), 2);
  EXPECT_TRUE((m * k).is_zero());
  QMatrix rhs(2, 1);
  rhs(0, 0) = 1, rhs(1, 0) = 3;
  EXPECT_FALSE(m.solve(rhs).has_value());
}

TEST(Linalg, RandomSolveRoundTrip) {
  RandomData rnd(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rnd.integer(1, 5));
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = rnd.rational(3, 4);
    }
    const auto inv = a.inverse();
    if (a.rank() < n) {
      EXPECT_FALSE(inv.has_value());
      continue;
    }
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE((a * *inv).is_identity());
  }
}

TEST(Fan, ProjectivePlaneStructure) {
  const Fan f = Fan::projective_space(2);
  EXPECT_EQ(f.rays().size(), 3u);
  EXPECT_EQ(f.cones().size(), 7u);  // {0}, 3 rays, 3 maximal cones
  EXPECT_EQ(f.cones()[0], Cone{});
  EXPECT_EQ(f.maximal_cones().size(), 3u);
  for (int c = 0; c < static_cast<int>(f.cones().size()); ++c) EXPECT_TRUE(f.is_smooth(c));
  EXPECT_TRUE(is_complete_sampled(f));
}

TEST(Fan, RejectsNonPrimitiveAndDuplicateRays) {
  EXPECT_THROW(Fan(2, {{2, 0}, {0, 1}}, {{0, 1}}), MalformedInput);
  EXPECT_THROW(Fan(2, {{1, 0}, {1, 0}}, {{0}, {1}}), MalformedInput);
  EXPECT_THROW(Fan(2, {{1, 0, 0}}, {{0}}), MalformedInput);
}

TEST(Fan, IncompleteFanDetected) {
  const Fan half(2, {{1, 0}, {0, 1}}, {{0, 1}});
  EXPECT_FALSE(is_complete_sampled(half));
}

TEST(Fan, ConeOfPoint) {
  const Fan f = Fan::projective_space(2);
  EXPECT_EQ(cone_of_point(IntVector{0, 0}, f), 0);
  EXPECT_EQ(f.cones()[cone_of_point(IntVector{1, 0}, f)], (Cone{0}));
  EXPECT_EQ(f.cones()[cone_of_point(IntVector{2, 1}, f)], (Cone{0, 1}));
  EXPECT_EQ(f.cones()[cone_of_point(IntVector{-1, -1}, f)], (Cone{2}));
  const Fan half(2, {{1, 0}, {0, 1}}, {{0, 1}});
  EXPECT_THROW(cone_of_point(IntVector{-1, 0}, half), NotFound);
}

TEST(Fan, QuotientCoordinatesRoundTrip) {
  const Fan f = Fan::projective_space(3);
  RandomData rnd(9);
  for (int c = 0; c < static_cast<int>(f.cones().size()); ++c) {
    const RationalVector v{rnd.rational(4, 3), rnd.rational(4, 3), rnd.rational(4, 3)};
    const RationalVector qv = f.quotient_coordinates(c, v);
    EXPECT_EQ(static_cast<int>(qv.size()), 3 - f.cone_dim(c));
    EXPECT_EQ(f.quotient_coordinates(c, f.lift_quotient(c, qv)), qv);
    // Moving along a ray of σ does not change the class.
    RationalVector w = v;
    for (int r : f.cones()[c]) {
      for (int i = 0; i < 3; ++i) w[i] += f.rays()[r][i] * q(5, 2);
    }
    EXPECT_EQ(f.canonical_representative(c, w), f.canonical_representative(c, v));
  }
}

TEST(Fan, BrauerSeveriMatrixPermutesMaximalConesCyclically) {
  const Fan f = Fan::projective_space(2);
  const LatticeMap a(IntMatrix{{0, -1}, {1, -1}});
  ASSERT_TRUE(is_fan_automorphism(a, f));
  std::set<int> seen;
  int cone = f.maximal_cones()[0];
  for (int step = 0; step < 3; ++step) {
    seen.insert(cone);
    cone = *map_cone(a, f, cone);
  }
  EXPECT_EQ(cone, f.maximal_cones()[0]);
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Fan, NonUnimodularMapRejected) {
  EXPECT_THROW(is_fan_automorphism(LatticeMap(IntMatrix{{2, 0}, {0, 1}}), Fan::projective_space(2)),
               MalformedInput);
  EXPECT_FALSE(is_fan_automorphism(LatticeMap(IntMatrix{{-1, 0}, {0, 1}}), Fan::projective_space(2)));
}

TEST(Fan, AutomorphismGroupsHaveExpectedOrders) {
  EXPECT_EQ(enumerate_automorphisms(Fan::projective_space(2)).size(), 6u);   // S_3
  EXPECT_EQ(enumerate_automorphisms(galtrop::testing::p1xp1_fan()).size(), 8u);  // dihedral of order 8
  EXPECT_EQ(enumerate_automorphisms(Fan::projective_space(3)).size(), 24u);  // S_4
}

TEST(Fan, ProductFanOfProjectiveLines) {
  const Fan f = galtrop::testing::p1xp1_fan();
  EXPECT_EQ(f.rank(), 2);
  EXPECT_EQ(f.rays().size(), 4u);
  EXPECT_EQ(f.maximal_cones().size(), 4u);
  EXPECT_TRUE(is_complete_sampled(f));
}

TEST(Fan, SmoothConeExtendsToLatticeBasis) {
  const Fan f = Fan::projective_space(3);
  for (int c = 0; c < static_cast<int>(f.cones().size()); ++c) {
    const auto basis = lattice_basis_extending(f, c);
    ASSERT_EQ(basis.size(), 3u);
    EXPECT_TRUE(IntMatrix::from_columns(basis, 3).is_unimodular());
    for (std::size_t i = 0; i < f.cones()[c].size(); ++i) {
      EXPECT_EQ(basis[i], f.rays()[f.cones()[c][i]]);
    }
  }
  const Fan singular(2, {{1, 0}, {1, 2}}, {{0, 1}});
  EXPECT_THROW(lattice_basis_extending(singular, singular.cone_index({0, 1})), UnsupportedCone);
}

TEST(Fan, DualSemigroupGeneratorsArePositiveOnCone) {
  const Fan f = Fan::projective_space(2);
  for (int c = 0; c < static_cast<int>(f.cones().size()); ++c) {
    for (const auto& m : dual_semigroup_generators(f, c)) {
      for (int r : f.cones()[c]) EXPECT_GE(dot(m, f.rays()[r]), 0);
    }
  }
}
