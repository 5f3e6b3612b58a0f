#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "skewmori/cones.hpp"
#include "skewmori/exact.hpp"
#include "skewmori/pfaffian.hpp"
#include "skewmori/random.hpp"

namespace skewmori::testutil {

inline ExactVector v(std::initializer_list<long> xs) { return make_vector(xs); }

inline std::set<IntVector> rays_of(const Cone& c) { return {c.rays().begin(), c.rays().end()}; }

inline std::set<IntVector> ray_set(std::initializer_list<std::initializer_list<long>> rays) {
  std::set<IntVector> out;
  for (auto r : rays) out.insert(primitive(make_vector(r)));
  return out;
}

inline ExactVector random_vector(IntSampler& rng, std::size_t d, long lo, long hi) {
  ExactVector x(d);
  for (auto& e : x) e = rng.uniform(lo, hi);
  return x;
}

inline RationalSkewMatrix random_skew(IntSampler& rng, std::size_t m, long bound) {
  RationalSkewMatrix z(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) z.set(i, j, rng.uniform(-bound, bound));
  }
  return z;
}

// Sum of r random rank-2 forms x ^ y.
inline RationalSkewMatrix random_low_rank_skew(IntSampler& rng, std::size_t m, int r, long bound) {
  RationalSkewMatrix z(m);
  for (int t = 0; t < r; ++t) {
    auto x = random_vector(rng, m, -bound, bound);
    auto y = random_vector(rng, m, -bound, bound);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) z.set(i, j, z.at(i, j) + x[i] * y[j] - x[j] * y[i]);
    }
  }
  return z;
}

// Caratheodory brute force: w is in cone(gens) iff it is a nonnegative
// combination of some linearly independent subset.
inline bool caratheodory_contains(const std::vector<ExactVector>& gens, const ExactVector& w) {
  if (is_zero(w)) return true;
  const std::size_t d = w.size();
  const std::size_t m = gens.size();
  if (m > 20) return false;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<ExactVector> sub;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint32_t{1} << i)) sub.push_back(gens[i]);
    }
    if (sub.size() > d || rank_of(sub, d) != sub.size()) continue;
    ExactMatrix a(d, sub.size());
    for (std::size_t c = 0; c < sub.size(); ++c) {
      for (std::size_t r = 0; r < d; ++r) a(r, c) = sub[c][r];
    }
    ExactVector x;
    if (!solve(a, w, x)) continue;
    bool nonneg = true;
    for (const auto& e : x) nonneg &= sgn(e) >= 0;
    if (nonneg) return true;
  }
  return false;
}

}  // namespace skewmori::testutil
