#ifndef BLOCKSORT_RNG_HPP
#define BLOCKSORT_RNG_HPP

#include <cstdint>
#include <random>

namespace blocksort {

// splitmix64 step; advances `state` and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state);

// Engine for substream `stream` of a master seed. Substreams are used to make
// sharded random work independent of the worker count: the schedule of
// (stream index -> work) is fixed, so results depend only on the master seed.
std::mt19937_64 make_substream(std::uint64_t master_seed, std::uint64_t stream);

// Uniform draw from [0, bound) by rejection. Hand-rolled so output is
// identical across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace blocksort

#endif  // BLOCKSORT_RNG_HPP
