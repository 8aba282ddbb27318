#include "ivlab/lab/rng.hpp"

namespace ivlab::lab {

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t seed = master;
  for (std::uint64_t index : path) {
    // Mix the index in, then take one output as the child seed.
    SplitMix64 mixer(seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    seed = mixer.next();
  }
  return seed;
}

Rational uniform_dyadic(SplitMix64& rng) {
  std::uint64_t k = 0;
  while (k == 0) k = rng.next() >> 11;
  Rational q(mpz_class(static_cast<unsigned long>(k)), mpz_class(1) << 53);
  q.canonicalize();
  return q;
}

}  // namespace ivlab::lab
