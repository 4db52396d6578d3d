#include "blocksort/rng.hpp"

namespace blocksort {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_substream(std::uint64_t master_seed,
                               std::uint64_t stream) {
  std::uint64_t state = master_seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  return std::mt19937_64(splitmix64(state));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // 2^64 mod bound; outputs below this threshold would bias the residue.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace blocksort
