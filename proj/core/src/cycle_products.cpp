#include "blocksort/cycle_products.hpp"

#include <cmath>
#include <stdexcept>

#include "blocksort/errors.hpp"
#include "blocksort/parallel.hpp"
#include "blocksort/rng.hpp"

namespace blocksort {

namespace {

// Raw helpers over 0-based buffers; the sampling loops are the only hot
// paths in this module and should not churn Permutation objects.

// out[t] = y[x[t]] with all entries 0-based.
void compose_into(const std::vector<int>& x, const std::vector<int>& y,
                  std::vector<int>& out) {
  for (size_t t = 0; t < x.size(); ++t)
    out[t] = y[static_cast<size_t>(x[t])];
}

// Walks the cycle of i0; true iff j0 is on it.
bool on_same_cycle(const std::vector<int>& perm, int i0, int j0) {
  int x = perm[static_cast<size_t>(i0)];
  while (x != i0) {
    if (x == j0) return true;
    x = perm[static_cast<size_t>(x)];
  }
  return false;
}

// Fills `image` (0-based) with a uniform full cycle on {0..n-1}: shuffle the
// arrangement after the anchor 0, close the cycle.
void random_full_cycle_into(int n, std::mt19937_64& rng,
                            std::vector<int>& tail, std::vector<int>& image) {
  for (int v = 1; v < n; ++v) tail[static_cast<size_t>(v) - 1] = v;
  for (size_t i = tail.size() - 1; i > 0; --i) {
    const size_t j =
        static_cast<size_t>(uniform_below(rng, static_cast<uint64_t>(i) + 1));
    std::swap(tail[i], tail[j]);
  }
  int prev = 0;
  for (int v : tail) {
    image[static_cast<size_t>(prev)] = v;
    prev = v;
  }
  image[static_cast<size_t>(prev)] = 0;
}

std::vector<std::vector<int>> all_full_cycles_raw(int h) {
  std::vector<std::vector<int>> cycles;
  for_each_full_cycle(h, [&](const Permutation& p) {
    std::vector<int> raw(static_cast<size_t>(h));
    for (int t = 1; t <= h; ++t) raw[static_cast<size_t>(t) - 1] = p(t) - 1;
    cycles.push_back(std::move(raw));
  });
  return cycles;
}

}  // namespace

Rational same_cycle_probability(int h) {
  if (h < 2) throw std::invalid_argument("same_cycle_probability needs h >= 2");
  if (h % 2 == 1) return make_rational(1, 2);
  return make_rational(1, 2) -
         make_rational(BigInt(2), BigInt(h - 1) * BigInt(h + 2));
}

Rational same_cycle_exhaustive(int h, int i, int j) {
  if (h < 2 || h > 7)
    throw std::invalid_argument("same_cycle_exhaustive supports 2 <= h <= 7");
  if (i < 1 || i > h || j < 1 || j > h || i == j)
    throw std::invalid_argument("need distinct elements i, j in 1..h");
  const auto cycles = all_full_cycles_raw(h);
  const int i0 = i - 1, j0 = j - 1;
  std::vector<int> product(static_cast<size_t>(h));
  BigInt hits = 0;
  for (const auto& x : cycles)
    for (const auto& y : cycles) {
      compose_into(x, y, product);
      if (on_same_cycle(product, i0, j0)) hits += 1;
    }
  const BigInt count = BigInt(static_cast<long>(cycles.size()));
  return make_rational(hits, count * count);
}

Rational same_cycle_exhaustive_reduced(int h) {
  if (h < 2 || h > 10)
    throw std::invalid_argument(
        "same_cycle_exhaustive_reduced supports 2 <= h <= 10");
  // Average over z of (#pairs on a common cycle of (1 2 .. h) z) / C(h,2).
  const std::vector<int> canonical = [&] {
    std::vector<int> c(static_cast<size_t>(h));
    for (int t = 0; t < h; ++t) c[static_cast<size_t>(t)] = (t + 1) % h;
    return c;
  }();
  std::vector<int> product(static_cast<size_t>(h));
  std::vector<char> seen(static_cast<size_t>(h));
  BigInt pair_total = 0;
  long cycle_count_total = 0;
  for_each_full_cycle(h, [&](const Permutation& zp) {
    std::vector<int> z(static_cast<size_t>(h));
    for (int t = 1; t <= h; ++t) z[static_cast<size_t>(t) - 1] = zp(t) - 1;
    compose_into(canonical, z, product);
    std::fill(seen.begin(), seen.end(), 0);
    long pairs = 0;
    for (int s = 0; s < h; ++s) {
      if (seen[static_cast<size_t>(s)]) continue;
      long len = 0;
      int x = s;
      while (!seen[static_cast<size_t>(x)]) {
        seen[static_cast<size_t>(x)] = 1;
        ++len;
        x = product[static_cast<size_t>(x)];
      }
      pairs += len * (len - 1) / 2;
    }
    pair_total += pairs;
    ++cycle_count_total;
  });
  return make_rational(pair_total,
                       BigInt(cycle_count_total) * BigInt(h) * BigInt(h - 1) /
                           2);
}

SameCycleEstimate same_cycle_montecarlo(int h, int i, int j,
                                        std::int64_t trials,
                                        std::uint64_t seed, int jobs) {
  if (h < 2) throw std::invalid_argument("same_cycle_montecarlo needs h >= 2");
  if (i < 1 || i > h || j < 1 || j > h || i == j)
    throw std::invalid_argument("need distinct elements i, j in 1..h");
  if (trials < 1) throw std::invalid_argument("need trials >= 1");

  // Fixed shard schedule: a function of trials alone, so the estimate is
  // identical no matter how many workers execute it.
  const int shards = trials >= 1 << 16 ? 64 : 1;
  const std::int64_t base = trials / shards;
  const std::int64_t extra = trials % shards;
  std::vector<std::int64_t> shard_hits(static_cast<size_t>(shards), 0);

  const int i0 = i - 1, j0 = j - 1;
  run_sharded(shards, jobs, [&](int s) {
    std::mt19937_64 rng =
        make_substream(seed, static_cast<std::uint64_t>(s));
    const std::int64_t mine = base + (s < extra ? 1 : 0);
    std::vector<int> tail(static_cast<size_t>(h) - 1);
    std::vector<int> x(static_cast<size_t>(h)), y(static_cast<size_t>(h)),
        product(static_cast<size_t>(h));
    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < mine; ++t) {
      random_full_cycle_into(h, rng, tail, x);
      random_full_cycle_into(h, rng, tail, y);
      compose_into(x, y, product);
      if (on_same_cycle(product, i0, j0)) ++hits;
    }
    shard_hits[static_cast<size_t>(s)] = hits;
  });

  std::int64_t hits = 0;
  for (const std::int64_t sh : shard_hits) hits += sh;

  SameCycleEstimate est;
  est.h = h;
  est.i = i;
  est.j = j;
  est.hits = hits;
  est.trials = trials;
  est.seed = seed;
  est.jobs = jobs;
  est.value = static_cast<double>(hits) / static_cast<double>(trials);
  est.stderr_ = std::sqrt(est.value * (1.0 - est.value) /
                          static_cast<double>(trials));
  return est;
}

Permutation extend_cycle(const Permutation& z, int a) {
  const int n = z.degree();
  if (cycle_count(z) != 1)
    throw std::invalid_argument("extend_cycle needs a full cycle");
  if (a < 1 || a > n)
    throw std::invalid_argument("insertion point out of range");
  std::vector<int> image(static_cast<size_t>(n) + 1);
  for (int t = 1; t <= n; ++t) image[static_cast<size_t>(t) - 1] = z(t);
  image[static_cast<size_t>(a) - 1] = n + 1;
  image[static_cast<size_t>(n)] = z(a);
  return Permutation(std::move(image));
}

int insertion_cycle_delta(const Permutation& z, int a) {
  const int n = z.degree();
  const Permutation s = compose(canonical_cycle(n), z);
  const Permutation s_ext = compose(canonical_cycle(n + 1), extend_cycle(z, a));
  const int delta = cycle_count(s_ext) - cycle_count(s);

  int predicted;
  if (a == 1) {
    predicted = 1;
  } else {
    const int left = a - 1, right = z(1);
    // equal elements share a cycle trivially
    const bool together = left == right || same_cycle(s, left, right);
    predicted = together ? 1 : -1;
  }
  if (delta != predicted)
    throw invariant_violation(
        "cycle insertion changed the product's cycle count by " +
        std::to_string(delta) + " where the case analysis predicts " +
        std::to_string(predicted));
  return delta;
}

}  // namespace blocksort
