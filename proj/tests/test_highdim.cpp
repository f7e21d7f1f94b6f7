#include <gtest/gtest.h>

#include <cmath>

#include "bjortho/cone2d.hpp"
#include "bjortho/highdim.hpp"
#include "bjortho/oracle.hpp"
#include "test_support.hpp"

using namespace bjortho;
using namespace bjortho::testing;

TEST(RestrictNorm, SupNormDiagonalSection) {
  const PlaneSection s = restrict_norm(Norm::lp(kInf, 3), {1, 1, 0}, {0, 0, 1});
  Rng rng(51);
  for (int k = 0; k < 100; ++k) {
    const VectorN c = random_vector(rng, 2);
    EXPECT_DOUBLE_EQ(s.norm().value(c), std::max(std::abs(c[0]), std::abs(c[1]))) << c;
  }
  EXPECT_EQ(s.norm().dim(), 2u);
}

TEST(RestrictNorm, EuclideanAndTaxicabCoordinateSections) {
  const double r = std::sqrt(0.5);
  const PlaneSection e = restrict_norm(Norm::lp(2, 3), {r, r, 0}, {0, 0, 1});
  const PlaneSection t = restrict_norm(Norm::lp(1, 3), {1, 0, 0}, {0, 1, 0});
  Rng rng(52);
  for (int k = 0; k < 100; ++k) {
    const VectorN c = random_vector(rng, 2);
    EXPECT_NEAR(e.norm().value(c), euclidean_length(c), 1e-14);
    EXPECT_NEAR(t.norm().value(c), std::abs(c[0]) + std::abs(c[1]), 1e-14);
  }
}

TEST(RestrictNorm, LiftAndCoefficientsRoundTrip) {
  const PlaneSection s = restrict_norm(Norm::lp(3, 4), {1, 2, 0, -1}, {0, 1, 1, 3});
  const VectorN c{0.75, -1.5};
  const VectorN back = s.coefficients(s.lift(c));
  EXPECT_NEAR(back[0], c[0], 1e-13);
  EXPECT_NEAR(back[1], c[1], 1e-13);
  EXPECT_DOUBLE_EQ(s.norm().value(c), s.ambient().value(s.lift(c)));
}

TEST(RestrictNorm, RejectsDependentAndMismatchedVectors) {
  EXPECT_THROW(restrict_norm(Norm::lp(2, 3), {1, 2, 3}, {-2, -4, -6}), InputError);
  EXPECT_THROW(restrict_norm(Norm::lp(2, 3), {1, 2, 3}, {1, 0}), InputError);
  EXPECT_THROW(restrict_norm(Norm::lp(2, 3), {0, 0, 0}, {1, 0, 0}), InputError);
}

TEST(Membership, Examples) {
  const Norm l2 = Norm::lp(2, 3);
  for (double eps : {0.0, 0.3, 0.9}) {
    EXPECT_TRUE(f_membership(l2, {1, 0, 0}, eps, {0, 1, 0}));
    EXPECT_TRUE(g_membership(l2, {1, 0, 0}, eps, {0, 1, 0}));
  }
  EXPECT_FALSE(f_membership(l2, {1, 0, 0}, 0.9, {1, 0, 0}));
  EXPECT_FALSE(g_membership(l2, {1, 0, 0}, 0.9, {1, 0, 0}));
  EXPECT_TRUE(f_membership(l2, {1, 0, 0}, 0.2, {0, 0, 0}));
  EXPECT_TRUE(g_membership(l2, {1, 0, 0}, 0.2, {0, 0, 0}));
}

TEST(Membership, SupNormMatchesGridOracle) {
  const Norm sup = Norm::lp(kInf, 3);
  const double eps = 0.4, level = std::sqrt(1 - eps * eps);
  Rng rng(53);
  int decided_f = 0, decided_g = 0;
  for (int k = 0; k < 30; ++k) {
    const VectorN x = random_vector(rng, 3), y = random_vector(rng, 3);
    const double nx = sup.value(x);
    const double grid = oracle::brute_force_min(sup, x, y, 1000000);
    // the grid overestimates by at most 4||x||/10^6
    if (grid / nx < level - 1e-5 || grid / nx > level + 1e-5) {
      ++decided_f;
      EXPECT_EQ(f_membership(sup, x, eps, y), grid / nx >= level) << x << " " << y;
    }
    const double ratio = oracle::brute_force_B_ratio(sup, x, y, 1000000);
    if (std::abs(ratio - eps) > 1e-3) {
      ++decided_g;
      EXPECT_EQ(g_membership(sup, x, eps, y), ratio <= eps) << x << " " << y;
    }
  }
  EXPECT_GT(decided_f, 20);
  EXPECT_GT(decided_g, 20);
}

TEST(SectionProperties, InducedNormAxioms) {
  Rng rng(54);
  const std::vector<NamedNorm> ambients{{"l1 R3", Norm::lp(1, 3)},
                                        {"l2.5 R4", Norm::lp(2.5, 4)},
                                        {"linf R3", Norm::lp(kInf, 3)},
                                        {"l1.5 R4", Norm::lp(1.5, 4)}};
  for (const auto& [name, ambient] : ambients) {
    for (int trial = 0; trial < 5; ++trial) {
      const PlaneSection s =
          restrict_norm(ambient, random_vector(rng, ambient.dim()), random_vector(rng, ambient.dim()));
      const Norm& n = s.norm();
      for (int k = 0; k < 100; ++k) {
        const VectorN u = random_vector(rng, 2), v = random_vector(rng, 2);
        const double c = uniform(rng, -5.0, 5.0);
        EXPECT_NEAR(n.value(c * u), std::abs(c) * n.value(u), 1e-12 * std::abs(c) * n.value(u)) << name;
        EXPECT_LE(n.value(u + v), (n.value(u) + n.value(v)) * (1 + 1e-12)) << name;
        EXPECT_GT(n.value(u), 0.0) << name;
      }
      EXPECT_EQ(n.value({0, 0}), 0.0);
      for (int k = 0; k < 36; ++k) EXPECT_NEAR(n.value(sphere_point(n, k * M_PI / 18)), 1.0, 1e-12) << name;
    }
  }
}

namespace {

// Compares direct membership of y = a x + b w against the cone computed on
// the section span{x, w}, skipping coefficient directions near its boundary.
template <typename Cone, typename Direct>
void check_section_consistency(const std::vector<NamedNorm>& ambients, Rng& rng, Cone&& cone,
                               Direct&& direct, int* decided) {
  for (const auto& [name, ambient] : ambients) {
    for (int trial = 0; trial < 4; ++trial) {
      const VectorN x = normalize(ambient, random_vector(rng, ambient.dim()));
      const VectorN w = random_vector(rng, ambient.dim());
      const PlaneSection s = restrict_norm(ambient, x, w);
      const double eps = uniform(rng, 0.1, 0.9);
      const ConePair pair = cone(s.norm(), VectorN{1, 0}, eps);
      for (int k = 0; k < 40; ++k) {
        const VectorN c = random_vector(rng, 2);
        const VectorN u = c * (1.0 / euclidean_length(c));
        if (distance_to_boundary(pair, u) < 1e-4) continue;
        ++*decided;
        EXPECT_EQ(direct(ambient, x, eps, s.lift(c)), pair.contains(c))
            << name << " x=" << x << " w=" << w << " eps=" << eps << " c=" << c;
      }
    }
  }
}

} // namespace

TEST(SectionProperties, FMembershipMatchesSectionCone) {
  Rng rng(55);
  int decided = 0;
  check_section_consistency(
      {{"l1 R3", Norm::lp(1, 3)}, {"l3 R3", Norm::lp(3, 3)}, {"linf R4", Norm::lp(kInf, 4)},
       {"l1.5 R4", Norm::lp(1.5, 4)}},
      rng, [](const Norm& n, const VectorN& x, double eps) { return f_cone(n, x, eps).pair; },
      f_membership, &decided);
  EXPECT_GT(decided, 500);
}

TEST(SectionProperties, GMembershipMatchesSectionCone) {
  Rng rng(56);
  int decided = 0;
  check_section_consistency({{"l3 R3", Norm::lp(3, 3)}, {"l1.5 R4", Norm::lp(1.5, 4)},
                             {"l2 R3", Norm::lp(2, 3)}},
                            rng, g_cone, g_membership, &decided);
  EXPECT_GT(decided, 400);
}

// Sections of the sup norm put x inside a flat face, where the distance has
// a kink at the orthogonal direction.
TEST(SectionProperties, OrthogonalWitnessOnFlatFaces) {
  Rng rng(1009);
  const Norm sup = Norm::lp(kInf, 3);
  for (int k = 0; k < 200; ++k) {
    const VectorN x = normalize(sup, random_vector(rng, 3));
    const PlaneSection s = restrict_norm(sup, x, random_vector(rng, 3));
    const VectorN e{1, 0};
    VectorN y{0, 1};
    ASSERT_NO_THROW(y = find_bj_direction(s.norm(), e)) << "x=" << x << " w=" << s.basis_y();
    EXPECT_TRUE(is_bj_orthogonal(s.norm(), e, y));
    EXPECT_TRUE(is_bj_orthogonal(sup, x, s.lift(y)));
  }
}
