#ifndef BLOCKSORT_PERM_HPP
#define BLOCKSORT_PERM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace blocksort {

/// A permutation of {1..n} in one-line notation. Values and positions are
/// 1-based throughout; image()[i-1] is the image of i. Immutable after
/// construction, which validates bijectivity.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }

  /// Image of i, 1 <= i <= degree().
  int operator()(int i) const { return image_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  /// Lexicographic order on images; makes Permutation usable as a map key.
  bool operator<(const Permutation& o) const { return image_ < o.image_; }

 private:
  std::vector<int> image_;
};

/// Left-to-right product: result(i) = q(p(i)), i.e. apply p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// Cycles of p, each opened at its minimum element, sorted by minimum.
/// Fixed points are included, so the cycles partition {1..n}.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::string to_string() const;  // "(1 3)(2 4)"
};

CycleDecomposition cycle_decomposition(const Permutation& p);
int cycle_count(const Permutation& p);

/// Whether i and j (distinct, in range) lie on one cycle of p.
bool same_cycle(const Permutation& p, int i, int j);

/// The cycle (1 2 ... n): i -> i+1, n -> 1. canonical_cycle(1) is identity.
Permutation canonical_cycle(int n);

/// Streams the (n-1)! full cycles of degree n, each exactly once, in a fixed
/// order: the cycle (1 a2 ... an) for arrangements (a2..an) of {2..n} taken
/// lexicographically.
class FullCycleEnumerator {
 public:
  explicit FullCycleEnumerator(int n);
  std::optional<Permutation> next();

 private:
  int n_;
  std::vector<int> tail_;
  bool done_ = false;
  bool first_ = true;
};

template <typename Fn>
void for_each_full_cycle(int n, Fn&& fn) {
  FullCycleEnumerator it(n);
  while (auto p = it.next()) fn(*p);
}

/// All n! permutations of degree n in lexicographic order of their images.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn);

/// Uniform over all (n-1)! full cycles (n >= 2): shuffles the arrangement of
/// {2..n} behind the anchor 1 and closes the cycle. Deterministic per seed.
Permutation random_full_cycle(int n, std::mt19937_64& rng);

/// Uniform over all n! permutations (Fisher-Yates).
Permutation random_permutation(int n, std::mt19937_64& rng);

/// Lexicographic rank in [0, n!); requires degree <= 20 so the rank fits
/// in 64 bits.
std::uint64_t rank_permutation(const Permutation& p);
Permutation unrank_permutation(int n, std::uint64_t rank);

/// Parses one-line notation: whitespace-separated values "3 4 1 7 5 6 2", or
/// the compact digit form "3417562" for n <= 9. Errors name the bad token.
Permutation parse_permutation(const std::string& text);

std::string to_one_line_string(const Permutation& p);

/// Cycle notation via cycle_decomposition, e.g. "(1 3)(2 4)".
std::string to_cycle_string(const Permutation& p);

// ---- implementation of templates -------------------------------------------

namespace detail {
bool next_image_permutation(std::vector<int>& image);
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = i + 1;
  do {
    fn(Permutation(image));
  } while (detail::next_image_permutation(image));
}

}  // namespace blocksort

#endif  // BLOCKSORT_PERM_HPP
