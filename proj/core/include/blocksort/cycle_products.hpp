#ifndef BLOCKSORT_CYCLE_PRODUCTS_HPP
#define BLOCKSORT_CYCLE_PRODUCTS_HPP

#include <cstdint>

#include "blocksort/perm.hpp"
#include "blocksort/rational.hpp"

namespace blocksort {

/// Probability that two fixed distinct elements of {1..h} land in the same
/// cycle of the product of two independent uniform full h-cycles:
/// 1/2 for odd h, 1/2 - 2/((h-1)(h+2)) for even h. Exact; h >= 2.
Rational same_cycle_probability(int h);

/// The same probability by enumerating all ((h-1)!)^2 ordered pairs of full
/// h-cycles (2 <= h <= 7). Exact fraction of pairs (x, y) whose product
/// compose(x, y) puts i and j on one cycle.
Rational same_cycle_exhaustive(int h, int i, int j);

/// Pair-free reduction (2 <= h <= 10): fixes x = (1 2 .. h) and averages,
/// over all full cycles z, the fraction of element pairs {i,j} lying on a
/// common cycle of compose((1 2 .. h), z). Equals same_cycle_exhaustive for
/// every pair by conjugation symmetry — a fact tested, not assumed.
Rational same_cycle_exhaustive_reduced(int h);

struct SameCycleEstimate {
  int h = 0;
  int i = 1, j = 2;
  double value = 0.0;    // sample fraction
  double stderr_ = 0.0;  // sqrt(value*(1-value)/trials)
  std::int64_t hits = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int jobs = 1;  // recorded; the estimate itself does not depend on it
};

/// Monte Carlo estimate over `trials` independent pairs of uniform full
/// h-cycles. Work is split into a fixed shard schedule derived from (seed,
/// trials) alone, so the result is bit-identical for every jobs value.
SameCycleEstimate same_cycle_montecarlo(int h, int i, int j,
                                        std::int64_t trials,
                                        std::uint64_t seed, int jobs = 1);

/// Inserts n+1 into the full n-cycle z just after a: the returned full
/// (n+1)-cycle z' has z'(a) = n+1, z'(n+1) = z(a) and agrees with z
/// elsewhere. Rejects inputs that are not single cycles.
Permutation extend_cycle(const Permutation& z, int a);

/// Effect of that insertion on the product with the canonical cycle. With
/// s  = compose(canonical_cycle(n),   z) and
/// s' = compose(canonical_cycle(n+1), extend_cycle(z, a)),
/// returns cycle_count(s') - cycle_count(s), which is
///   +1 if a == 1,
///   +1 if a >= 2 and a-1 and z(1) share a cycle of s (including a-1 == z(1)),
///   -1 otherwise.
/// Throws invariant_violation if the observed change contradicts this case
/// analysis.
int insertion_cycle_delta(const Permutation& z, int a);

}  // namespace blocksort

#endif  // BLOCKSORT_CYCLE_PRODUCTS_HPP
