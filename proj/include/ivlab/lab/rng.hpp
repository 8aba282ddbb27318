#pragma once

// Seedable, splittable randomness for the experiments. Every trial derives
// its own stream from (master seed, path of indices), so results do not
// depend on execution order or thread count.

#include <cstdint>
#include <initializer_list>

#include "ivlab/scalar.hpp"

namespace ivlab::lab {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, full period.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Seed of the substream addressed by `path` below `master`.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

/// k / 2^53 with k uniform on [1, 2^53 - 1]: a dyadic rational in (0, 1).
Rational uniform_dyadic(SplitMix64& rng);

}  // namespace ivlab::lab
