#include <gtest/gtest.h>

#include "skewmori/cones.hpp"
#include "skewmori/errors.hpp"
#include "skewmori/geometry.hpp"
#include "test_util.hpp"

using namespace skewmori;
using skewmori::testutil::ray_set;
using skewmori::testutil::rays_of;
using skewmori::testutil::v;

TEST(Cones, InteriorGeneratorIsDropped) {
  auto c = cone_from_generators({v({1, 0}), v({0, 1}), v({1, 1})});
  EXPECT_EQ(rays_of(c), ray_set({{1, 0}, {0, 1}}));
}

TEST(Cones, SimplicialRankThree) {
  auto c = cone_from_generators({v({1, 0, 0}), v({2, -1, 0}), v({3, -2, -1})});
  EXPECT_EQ(c.rays().size(), 3u);
  EXPECT_TRUE(c.is_pointed());
  EXPECT_TRUE(c.is_full_dimensional());
}

TEST(Cones, ProportionalGenerators) {
  auto c = cone_from_generators({v({1, 1}), v({2, 2})});
  EXPECT_EQ(rays_of(c), ray_set({{1, 1}}));
  EXPECT_EQ(c.dim(), 1u);
}

TEST(Cones, RaysAreSorted) {
  auto c = cone_from_generators({v({0, 1}), v({3, 0}), v({1, 1})});
  ASSERT_EQ(c.rays().size(), 2u);
  EXPECT_LT(c.rays()[0], c.rays()[1]);
}

TEST(Cones, DimensionMismatch) {
  EXPECT_THROW(cone_from_generators({v({1, 0}), v({1, 0, 0})}), DimensionError);
  EXPECT_THROW(intersect(Cone::full_space(2), Cone::full_space(3)), DimensionError);
}

TEST(Cones, OctantIsSelfDual) {
  auto oct = cone_from_generators({v({1, 0}), v({0, 1})});
  EXPECT_EQ(dual(oct), oct);
}

TEST(Cones, DualOfWedge) {
  auto c = cone_from_generators({v({1, 0}), v({1, 1})});
  EXPECT_EQ(rays_of(dual(c)), ray_set({{0, 1}, {1, -1}}));
}

TEST(Cones, DualOfNefIsMoriForA6) {
  // Duality here is with respect to the standard dot product; the Mori cone
  // lives in curve coordinates, so compare through the lattice pairing.
  EXPECT_TRUE(equal(divisor_dual(mori_cone(6)), nef_cone(6)));
  EXPECT_TRUE(equal(curve_dual(nef_cone(6)), mori_cone(6)));
}

TEST(Cones, IntersectOctantWithHalfplane) {
  auto oct = cone_from_generators({v({1, 0}), v({0, 1})});
  auto half = Cone::from_inequalities(2, {v({1, -1})});
  EXPECT_EQ(rays_of(intersect(oct, half)), ray_set({{1, 0}, {1, 1}}));
  EXPECT_EQ(intersect(oct, oct), oct);
}

TEST(Cones, IntersectionProducesNewRay) {
  // <D8, D2> and <D6, E1> for n = 7 meet in the ray (6,-3,-2).
  auto a = cone_from_generators({v({4, -3, -2}), v({1, 0, 0})});
  auto b = cone_from_generators({v({3, -2, -1}), v({0, 1, 0})});
  EXPECT_EQ(rays_of(intersect(a, b)), ray_set({{6, -3, -2}}));
  // <D8, E1> and <D6, E1> only share E1.
  auto c = cone_from_generators({v({4, -3, -2}), v({0, 1, 0})});
  EXPECT_EQ(rays_of(intersect(c, b)), ray_set({{0, 1, 0}}));
}

TEST(Cones, Membership) {
  auto oct = cone_from_generators({v({1, 0}), v({0, 1})});
  EXPECT_TRUE(contains(oct, v({0, 0})));
  EXPECT_FALSE(interior_contains(oct, v({0, 0})));
  EXPECT_TRUE(interior_contains(oct, v({1, 2})));
  EXPECT_TRUE(contains(nef_cone(6), v({2, -1, 0})));
  EXPECT_TRUE(contains(eff_cone(6), v({1, 1, 1})));
  EXPECT_FALSE(contains(movable_cone(6), v({0, 1, 0})));
}

TEST(Cones, DimAndEqual) {
  auto oct3 = cone_from_generators({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  EXPECT_EQ(dim(oct3), 3u);
  EXPECT_EQ(movable_cone(8).rays().size(), 5u);
  EXPECT_TRUE(equal(cone_from_generators({v({1, 0}), v({0, 1})}),
                    cone_from_generators({v({0, 1}), v({1, 0}), v({1, 1})})));
}

TEST(Cones, DegenerateCones) {
  auto z = Cone::zero(3);
  EXPECT_TRUE(z.rays().empty());
  EXPECT_EQ(z.dim(), 0u);
  EXPECT_TRUE(z.contains(v({0, 0, 0})));
  EXPECT_FALSE(z.contains(v({1, 0, 0})));
  auto full = Cone::full_space(3);
  EXPECT_FALSE(full.is_pointed());
  EXPECT_TRUE(full.contains(v({-1, 5, 2})));
  EXPECT_EQ(dual(z), full);
  EXPECT_EQ(dual(full), z);
}

TEST(Cones, NonPointed) {
  auto halfplane = cone_from_generators({v({1, 0}), v({-1, 0}), v({0, 1})});
  EXPECT_FALSE(halfplane.is_pointed());
  EXPECT_EQ(halfplane.lineality().size(), 1u);
  EXPECT_TRUE(halfplane.contains(v({-7, 1})));
  EXPECT_FALSE(halfplane.contains(v({0, -1})));
  EXPECT_EQ(dual(dual(halfplane)), halfplane);
}

namespace {

std::vector<ExactVector> random_generators(IntSampler& rng) {
  const auto d = static_cast<std::size_t>(rng.uniform(1, 5));
  const auto k = rng.uniform(1, 7);
  std::vector<ExactVector> gens;
  for (long i = 0; i < k; ++i) gens.push_back(testutil::random_vector(rng, d, -3, 3));
  return gens;
}

}  // namespace

TEST(ConeProperties, Biduality) {
  IntSampler rng(11);
  for (int t = 0; t < 200; ++t) {
    auto gens = random_generators(rng);
    auto c = Cone::from_generators(gens.front().size(), gens);
    auto dd = dual(dual(c));
    EXPECT_EQ(dd, c) << "case " << t;
    EXPECT_TRUE(equal(dd, c));
  }
}

TEST(ConeProperties, FarkasAgreesWithCaratheodory) {
  IntSampler rng(12);
  for (int t = 0; t < 150; ++t) {
    auto gens = random_generators(rng);
    const std::size_t d = gens.front().size();
    auto c = Cone::from_generators(d, gens);
    for (int s = 0; s < 6; ++s) {
      ExactVector w = testutil::random_vector(rng, d, -4, 4);
      if (s % 2 == 0) {
        // Bias half of the samples into the cone.
        ExactVector sum(d);
        for (const auto& g : gens) {
          const long coef = rng.uniform(0, 2);
          for (std::size_t i = 0; i < d; ++i) sum[i] += coef * g[i];
        }
        w = sum;
      }
      bool by_facets = true;
      for (const auto& f : c.inequalities()) by_facets &= sgn(dot(f, w)) >= 0;
      const bool by_gens = testutil::caratheodory_contains(gens, w);
      EXPECT_EQ(c.contains(w), by_gens) << "case " << t << " " << to_string(w);
      EXPECT_EQ(by_facets, by_gens);
    }
  }
}

TEST(ConeProperties, IntersectionSoundness) {
  IntSampler rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<ExactVector> g1, g2;
    for (long i = rng.uniform(1, 6); i > 0; --i) g1.push_back(testutil::random_vector(rng, d, -3, 3));
    for (long i = rng.uniform(1, 6); i > 0; --i) g2.push_back(testutil::random_vector(rng, d, -3, 3));
    auto a = Cone::from_generators(d, g1);
    auto b = Cone::from_generators(d, g2);
    auto both = intersect(a, b);
    EXPECT_TRUE(contains(a, both));
    EXPECT_TRUE(contains(b, both));
    for (int s = 0; s < 10; ++s) {
      auto w = testutil::random_vector(rng, d, -3, 3);
      EXPECT_EQ(both.contains(w), a.contains(w) && b.contains(w));
    }
  }
}

TEST(ConeProperties, GeneratorOrderDoesNotMatter) {
  IntSampler rng(14);
  for (int t = 0; t < 50; ++t) {
    auto gens = random_generators(rng);
    auto rev = gens;
    std::reverse(rev.begin(), rev.end());
    EXPECT_EQ(Cone::from_generators(gens.front().size(), gens), Cone::from_generators(gens.front().size(), rev));
  }
}
