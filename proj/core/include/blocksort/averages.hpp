#ifndef BLOCKSORT_AVERAGES_HPP
#define BLOCKSORT_AVERAGES_HPP

#include <optional>

#include "blocksort/rational.hpp"

namespace blocksort {

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
Rational harmonic(int n);

/// Average number of cycles of the product of the canonical n-cycle with a
/// uniform full n-cycle: 1/(floor((n-1)/2) + 1) + H_{n-1}. Exact, n >= 1.
Rational avg_cycles_closed(int n);

/// Average number of block interchanges needed to sort an n-permutation:
/// (n - 1/(floor(n/2)+1) - sum_{i=2..n} 1/i) / 2, which equals
/// (n + 1 - avg_cycles_closed(n+1)) / 2. Exact, n >= 1.
Rational avg_distance_closed(int n);

/// Brute-force mean of cycle_count(compose(canonical_cycle(n), z)) over all
/// (n-1)! full cycles z; 2 <= n <= 10.
Rational avg_cycles_brute(int n);

/// Brute-force mean of bi_distance over all n! permutations; 2 <= n <= 8.
Rational avg_distance_brute(int n);

/// Consecutive differences of avg_cycles_closed around index 2m+1:
/// odd_step  = a(2m+2) - a(2m+1), always 1/(2m+1)  (m >= 0);
/// even_step = a(2m+1) - a(2m),   always 1/(2m) - 1/(m(m+1))  (m >= 1,
/// absent at m = 0 since a(0) is undefined).
struct AvgCycleIncrements {
  Rational odd_step;
  std::optional<Rational> even_step;
};

AvgCycleIncrements avg_cycle_increments(int m);

/// avg_cycles_closed(n) recomputed through the Stirling generating
/// polynomial F(x) = x(x+1)...(x+n) = sum_k c(n+1,k) x^k: the parity class
/// k = n (mod 2) of sum_k k*c(n+1,k) is extracted from F'(1) and F'(-1) and
/// normalized by C(n+1,2) (n-1)!. Exact, n >= 2.
Rational avg_cycles_via_stirling(int n);

}  // namespace blocksort

#endif  // BLOCKSORT_AVERAGES_HPP
