#include <gtest/gtest.h>

#include <map>

#include "skewmori/chambers.hpp"
#include "skewmori/errors.hpp"
#include "skewmori/geometry.hpp"
#include "test_util.hpp"

using namespace skewmori;
using skewmori::testutil::ray_set;
using skewmori::testutil::rays_of;
using skewmori::testutil::v;

namespace {

const Decomposition& cox_decomposition(int n) {
  static std::map<int, Decomposition> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gkz_chambers(VectorConfiguration::cox(n))).first;
  return it->second;
}

ForcedLabel singletons(std::initializer_list<const char*> names) {
  ForcedLabel l;
  for (auto s : names) l.push_back({s});
  return l;
}

}  // namespace

TEST(Configuration, CoxAmbientIsEff) {
  for (int n = 4; n <= 9; ++n) EXPECT_TRUE(equal(VectorConfiguration::cox(n).ambient(), eff_cone(n))) << n;
  EXPECT_THROW(VectorConfiguration::from_vectors({v({1, 0}), v({0, 0})}), DomainError);
  EXPECT_THROW(VectorConfiguration::from_vectors({v({1, 0}), v({0, 1, 0})}), DimensionError);
}

TEST(Gkz, ChamberCounts) {
  const std::map<int, std::size_t> counts{{4, 2}, {5, 3}, {6, 5}, {7, 9}, {8, 15}};
  for (const auto& [n, want] : counts) EXPECT_EQ(cox_decomposition(n).chambers.size(), want) << n;
}

TEST(Gkz, NewRayForA7) {
  bool found = false;
  for (const auto& ch : cox_decomposition(7).chambers) found |= rays_of(ch.cone).count(primitive(v({6, -3, -2}))) > 0;
  EXPECT_TRUE(found);
}

TEST(Gkz, UnitVectorsGiveOneChamber) {
  auto d = gkz_chambers(VectorConfiguration::from_vectors({v({1, 0}), v({0, 1})}));
  ASSERT_EQ(d.chambers.size(), 1u);
  EXPECT_TRUE(d.walls.empty());
}

TEST(Gkz, RankLimit) {
  EXPECT_THROW(gkz_chambers(VectorConfiguration::cox(12)), DomainError);
  EXPECT_THROW(gkz_chambers(VectorConfiguration::from_vectors({v({1, 0, 0}), v({0, 1, 0})})), DomainError);
}

TEST(Gkz, ThreadCountDoesNotMatter) {
  auto a = gkz_chambers(VectorConfiguration::cox(8), 1);
  auto b = gkz_chambers(VectorConfiguration::cox(8), 3);
  ASSERT_EQ(a.chambers.size(), b.chambers.size());
  for (std::size_t i = 0; i < a.chambers.size(); ++i) {
    EXPECT_EQ(a.chambers[i].cone, b.chambers[i].cone);
    EXPECT_EQ(a.chambers[i].forced, b.chambers[i].forced);
  }
}

TEST(Gkz, CoverageAndDisjointness) {
  for (int n : {6, 7, 8}) {
    const auto& d = cox_decomposition(n);
    const auto eff = eff_generators(n);
    IntSampler rng(static_cast<std::uint64_t>(n));
    for (int t = 0; t < 200; ++t) {
      ExactVector w(d.rank);
      for (const auto& g : eff) {
        const mpq_class coef(rng.uniform(0, 1000), 7);
        for (std::size_t i = 0; i < d.rank; ++i) w[i] += coef * g.coeffs[i];
      }
      std::size_t closed = 0, open = 0;
      for (const auto& ch : d.chambers) {
        closed += ch.cone.contains(w);
        open += ch.cone.interior_contains(w);
      }
      EXPECT_GE(closed, 1u);
      EXPECT_LE(open, 1u);
      if (open == 0 && eff_cone(n).interior_contains(w)) EXPECT_GE(closed, 2u);
    }
    // Interior points of each chamber lie in no other chamber.
    for (std::size_t i = 0; i < d.chambers.size(); ++i) {
      for (std::size_t j = 0; j < d.chambers.size(); ++j) {
        if (i != j) EXPECT_FALSE(d.chambers[j].cone.interior_contains(d.chambers[i].representative));
      }
    }
  }
}

TEST(Gkz, RefinesNefMovEff) {
  for (int n : {6, 7, 8}) {
    const auto nef = nef_cone(n);
    const auto mov = movable_cone(n);
    for (const auto& ch : cox_decomposition(n).chambers) {
      const bool in_nef = contains(nef, ch.cone);
      const bool in_mov = contains(mov, ch.cone);
      const bool outside_mov = !mov.interior_contains(ch.representative) && !in_mov;
      EXPECT_EQ(int(in_nef) + int(in_mov && !in_nef) + int(outside_mov), 1);
      if (in_nef) {
        EXPECT_EQ(ch.zone, Zone::Nef);
        EXPECT_TRUE(ch.forced.empty());
      }
    }
  }
}

TEST(ChamberOf, NefOfA8) {
  auto config = VectorConfiguration::cox(8);
  auto ch = chamber_of(config, nef_cone(8).interior_point());
  EXPECT_TRUE(ch.maximal);
  EXPECT_EQ(rays_of(ch.cone), ray_set({{1, 0, 0, 0}, {4, -3, -2, -1}, {2, -1, 0, 0}, {3, -2, -1, 0}}));
  EXPECT_TRUE(ch.forced.empty());
}

TEST(ChamberOf, BoundaryIsNotMaximal) {
  auto config = VectorConfiguration::cox(8);
  auto ch = chamber_of(config, v({2, -1, 0, 0}));
  EXPECT_FALSE(ch.maximal);
  EXPECT_LT(ch.cone.dim(), 4u);
  EXPECT_THROW(chamber_of(config, v({-1, 0, 0, 0})), DomainError);
}

TEST(ChamberOf, NearE1ForA6) {
  auto config = VectorConfiguration::cox(6);
  auto ch = chamber_of(config, v({1, 10, 1}));
  EXPECT_TRUE(ch.maximal);
  EXPECT_EQ(rays_of(ch.cone), ray_set({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(ch.forced, singletons({"S1", "S2"}));
}

TEST(Forced, A6Examples) {
  auto config = VectorConfiguration::cox(6);
  // interior of <D2, D4, E2>
  EXPECT_EQ(forced_groups(config, v({3, -1, 1})), singletons({"S2"}));
  EXPECT_TRUE(forced_groups(config, nef_cone(6).interior_point()).empty());
  EXPECT_EQ(forced_groups(config, v({1, 1, 1})), singletons({"S1", "S2"}));
}

TEST(Forced, A8MovableChamberNeedsBothDivisors) {
  auto config = VectorConfiguration::cox(8);
  // interior of <D2, D6, D8, D_M>
  auto w = cone_from_generators({v({1, 0, 0, 0}), v({3, -2, -1, 0}), v({4, -3, -2, -1}), v({6, -3, -2, 0})}).interior_point();
  EXPECT_EQ(forced_groups(config, w), (ForcedLabel{{"S1", "S3"}}));
  EXPECT_EQ(label_string(forced_groups(config, w)), "{S1&S3}");
}

TEST(Sbl, RegionCounts) {
  EXPECT_EQ(cox_decomposition(6).regions.size(), 4u);
  EXPECT_EQ(cox_decomposition(7).regions.size(), 8u);
  EXPECT_EQ(cox_decomposition(8).regions.size(), 9u);
  std::vector<std::size_t> sizes;
  for (const auto& r : cox_decomposition(8).regions) sizes.push_back(r.chambers.size());
  std::sort(sizes.rbegin(), sizes.rend());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 3, 2, 2, 1, 1, 1, 1, 1}));
}

TEST(Sbl, RegionsCoarsenChambers) {
  for (int n : {6, 7, 8}) {
    const auto& d = cox_decomposition(n);
    std::size_t total = 0;
    for (std::size_t r = 0; r < d.regions.size(); ++r) {
      total += d.regions[r].chambers.size();
      for (auto c : d.regions[r].chambers) {
        EXPECT_EQ(d.chambers[c].region, r);
        EXPECT_EQ(d.chambers[c].forced, d.regions[r].label);
      }
    }
    EXPECT_EQ(total, d.chambers.size());
  }
}

TEST(Sbl, A8ListedChambers) {
  const auto& d = cox_decomposition(8);
  auto label_of = [&](std::initializer_list<std::initializer_list<long>> rays) {
    const auto want = ray_set(rays);
    for (const auto& ch : d.chambers) {
      if (rays_of(ch.cone) == want) return ch.forced;
    }
    ADD_FAILURE() << "chamber not found";
    return ForcedLabel{};
  };
  const ForcedLabel s2 = singletons({"S2"});
  EXPECT_EQ(label_of({{0, 0, 1, 0}, {1, 0, 0, 0}, {4, -3, -2, -1}, {2, -1, 0, 0}}), s2);
  EXPECT_EQ(label_of({{0, 0, 1, 0}, {3, -2, -1, 0}, {4, -3, -2, -1}, {2, -1, 0, 0}}), s2);
  const ForcedLabel s13 = singletons({"S1", "S3"});
  EXPECT_EQ(label_of({{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {6, -3, -2, 0}}), s13);
  EXPECT_EQ(label_of({{0, 1, 0, 0}, {0, 0, 0, 1}, {4, -3, -2, -1}, {6, -3, -2, 0}}), s13);
  const ForcedLabel s23 = singletons({"S2", "S3"});
  EXPECT_EQ(label_of({{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 0, 0, 0}, {2, -1, 0, 0}}), s23);
  EXPECT_EQ(label_of({{0, 0, 0, 1}, {0, 0, 1, 0}, {3, -2, -1, 0}, {2, -1, 0, 0}}), s23);
  EXPECT_EQ(label_of({{0, 0, 0, 1}, {0, 0, 1, 0}, {4, -3, -2, -1}, {3, -2, -1, 0}}), s23);
  const ForcedLabel s3 = singletons({"S3"});
  EXPECT_EQ(label_of({{0, 0, 0, 1}, {1, 0, 0, 0}, {2, -1, 0, 0}, {3, -2, -1, 0}}), s3);
  EXPECT_EQ(label_of({{0, 0, 0, 1}, {1, 0, 0, 0}, {6, -3, -2, 0}, {3, -2, -1, 0}}), s3);
  EXPECT_EQ(label_of({{0, 0, 0, 1}, {4, -3, -2, -1}, {6, -3, -2, 0}, {3, -2, -1, 0}}), s3);
  EXPECT_EQ(label_of({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {4, -3, -2, -1}}), singletons({"S1", "S2"}));
  EXPECT_EQ(label_of({{0, 1, 0, 0}, {1, 0, 0, 0}, {4, -3, -2, -1}, {6, -3, -2, 0}}), singletons({"S1"}));
  EXPECT_EQ(label_of({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}), singletons({"S1", "S2", "S3"}));
  EXPECT_TRUE(label_of({{1, 0, 0, 0}, {4, -3, -2, -1}, {2, -1, 0, 0}, {3, -2, -1, 0}}).empty());
  EXPECT_EQ(label_of({{1, 0, 0, 0}, {4, -3, -2, -1}, {6, -3, -2, 0}, {3, -2, -1, 0}}), (ForcedLabel{{"S1", "S3"}}));
}

TEST(Walls, A6) {
  const auto& d = cox_decomposition(6);
  for (const auto& w : d.walls) {
    EXPECT_EQ(w.cone.dim(), 2u);
    EXPECT_LT(w.first, w.second);
  }
  // The wall joining D4 and E2 separates two chambers with the same label.
  bool found = false;
  for (const auto& w : d.walls) {
    if (rays_of(w.cone) == ray_set({{2, -1, 0}, {0, 0, 1}})) {
      found = true;
      EXPECT_EQ(d.chambers[w.first].region, d.chambers[w.second].region);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Conjecture, Counts) {
  const std::map<int, std::size_t> want{{6, 3}, {7, 6}, {8, 7}};
  for (const auto& [n, count] : want) {
    auto c = conjecture_counts(n);
    EXPECT_EQ(c.computed, count);
    EXPECT_EQ(c.predicted, count);
    EXPECT_EQ(c.divisorial, count);
    EXPECT_TRUE(c.labels_match) << n;
  }
  auto c7 = conjecture_counts(7);
  std::set<ForcedLabel> labels(c7.computed_labels.begin(), c7.computed_labels.end());
  EXPECT_EQ(labels, (std::set<ForcedLabel>{singletons({"S1"}), singletons({"S2"}), singletons({"S3"}),
                                           singletons({"S1", "S2"}), singletons({"S1", "S3"}),
                                           singletons({"S2", "S3"})}));
}

TEST(Blowup, Decompositions) {
  auto d5 = blowup_one_decomposition(5);
  ASSERT_EQ(d5.chambers.size(), 3u);
  EXPECT_EQ(rays_of(d5.chambers[0].cone), ray_set({{0, 1}, {1, 0}}));
  EXPECT_EQ(d5.chambers[0].forced, singletons({"E1"}));
  EXPECT_EQ(rays_of(d5.chambers[1].cone), ray_set({{1, 0}, {2, -1}}));
  EXPECT_TRUE(d5.chambers[1].forced.empty());
  EXPECT_EQ(rays_of(d5.chambers[2].cone), ray_set({{2, -1}, {3, -2}}));
  EXPECT_EQ(d5.chambers[2].forced, singletons({"sec2"}));

  auto d6 = blowup_one_decomposition(6);
  std::set<IntVector> walls;
  for (const auto& w : d6.walls) walls.insert(w.cone.rays().begin(), w.cone.rays().end());
  EXPECT_EQ(walls, ray_set({{1, 0}, {2, -1}}));
  std::set<IntVector> all;
  for (const auto& ch : d6.chambers) all.insert(ch.cone.rays().begin(), ch.cone.rays().end());
  EXPECT_TRUE(all.count(primitive(v({3, -2}))));
  for (int n = 4; n <= 14; ++n) {
    auto d = blowup_one_decomposition(n);
    EXPECT_EQ(d.chambers.size(), static_cast<std::size_t>((n - 1) / 2 + 1));
    EXPECT_EQ(d.regions.size(), d.chambers.size());
  }
  EXPECT_THROW(blowup_one_decomposition(3), DomainError);
}

TEST(Blowup, LabelsGrowAwayFromD2) {
  const int n = 11;
  // D2 + bE1: towards E1 for b > 0, towards D_{n+1} for b < 0.
  auto label_at = [&](const mpq_class& b) { return blowup_one_label(n, ExactVector{1, b}); };
  EXPECT_TRUE(label_at(0).empty());
  EXPECT_EQ(label_at(mpq_class(1, 100)), singletons({"E1"}));
  EXPECT_EQ(label_at(5), singletons({"E1"}));
  int previous = 0;
  for (int step = 1; step <= 80; ++step) {
    const mpq_class b(-step, 96);
    auto l = label_at(b);
    const int h = l.empty() ? 0 : std::stoi(l.front().front().substr(3));
    EXPECT_GE(h, previous) << b.get_str();
    previous = h;
  }
  EXPECT_EQ(previous, 5);
  // In (D_{2h}, D_{2h+2}]: b in [-h/(h+1), -(h-1)/h).
  EXPECT_EQ(label_at(mpq_class(-2, 3)), singletons({"sec2"}));
  EXPECT_EQ(label_at(mpq_class(-3, 4)), singletons({"sec3"}));
  EXPECT_TRUE(label_at(mpq_class(-1, 2)).empty());
  EXPECT_THROW(label_at(-1), DomainError);
}
