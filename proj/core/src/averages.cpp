#include "blocksort/averages.hpp"

#include <stdexcept>

#include "blocksort/cycle_graph.hpp"
#include "blocksort/hultman.hpp"
#include "blocksort/perm.hpp"

namespace blocksort {

Rational harmonic(int n) {
  if (n < 0) throw std::invalid_argument("harmonic needs n >= 0");
  Rational h = 0;
  for (int i = 1; i <= n; ++i) h += make_rational(1, i);
  return h;
}

Rational avg_cycles_closed(int n) {
  if (n < 1) throw std::invalid_argument("avg_cycles_closed needs n >= 1");
  return make_rational(1, (n - 1) / 2 + 1) + harmonic(n - 1);
}

Rational avg_distance_closed(int n) {
  if (n < 1) throw std::invalid_argument("avg_distance_closed needs n >= 1");
  return (Rational(n + 1) - avg_cycles_closed(n + 1)) / 2;
}

Rational avg_cycles_brute(int n) {
  if (n < 2 || n > 10)
    throw std::invalid_argument("avg_cycles_brute supports 2 <= n <= 10");
  const Permutation base = canonical_cycle(n);
  BigInt total = 0;
  long count = 0;
  for_each_full_cycle(n, [&](const Permutation& z) {
    total += cycle_count(compose(base, z));
    ++count;
  });
  return make_rational(total, BigInt(count));
}

Rational avg_distance_brute(int n) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("avg_distance_brute supports 2 <= n <= 8");
  BigInt total = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    total += bi_distance(p);
  });
  return make_rational(total, factorial(static_cast<unsigned long>(n)));
}

AvgCycleIncrements avg_cycle_increments(int m) {
  if (m < 0) throw std::invalid_argument("avg_cycle_increments needs m >= 0");
  AvgCycleIncrements inc;
  inc.odd_step = avg_cycles_closed(2 * m + 2) - avg_cycles_closed(2 * m + 1);
  if (m >= 1)
    inc.even_step = avg_cycles_closed(2 * m + 1) - avg_cycles_closed(2 * m);
  return inc;
}

Rational avg_cycles_via_stirling(int n) {
  if (n < 2) throw std::invalid_argument("avg_cycles_via_stirling needs n >= 2");
  const auto row = stirling_first_row(n + 1);
  // F(x) = sum_k c(n+1,k) x^k; F'(1) and F'(-1) split sum_k k c(n+1,k) into
  // parity classes, of which only k = n (mod 2) carries weight here.
  BigInt deriv_at_1 = 0, deriv_at_minus_1 = 0;
  for (int k = 1; k <= n + 1; ++k) {
    const BigInt term = BigInt(k) * row[static_cast<size_t>(k)];
    deriv_at_1 += term;
    if (k % 2 == 1) deriv_at_minus_1 += term;
    else deriv_at_minus_1 -= term;
  }
  const BigInt selected =
      n % 2 == 1 ? exact_div(deriv_at_1 + deriv_at_minus_1, 2)
                 : exact_div(deriv_at_1 - deriv_at_minus_1, 2);
  return make_rational(selected,
                       binomial(static_cast<unsigned long>(n) + 1, 2) *
                           factorial(static_cast<unsigned long>(n) - 1));
}

}  // namespace blocksort
