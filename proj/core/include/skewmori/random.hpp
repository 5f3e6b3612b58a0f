#pragma once

#include <cstdint>
#include <random>

namespace skewmori {

// Seeded integer sampler whose output depends only on the seed: it draws raw
// words from std::mt19937_64 (fully specified by the standard) and maps them
// to a range by rejection, avoiding implementation-defined distributions.
class IntSampler {
 public:
  explicit IntSampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Independent stream seed for sub-task `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace skewmori
