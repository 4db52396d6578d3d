#ifndef BLOCKSORT_BLOCK_SORTER_HPP
#define BLOCKSORT_BLOCK_SORTER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "blocksort/perm.hpp"
#include "blocksort/rational.hpp"

namespace blocksort {

/// Two disjoint blocks of consecutive entries, the first spanning positions
/// i..k and the second j..l, with 1 <= i <= k < j <= l <= n. Applying the
/// interchange swaps the blocks and keeps everything else (including the
/// order inside each block) fixed. Adjacent blocks (k+1 == j) are allowed.
struct BlockInterchange {
  int i, k, j, l;
  bool operator==(const BlockInterchange&) const = default;
};

bool is_valid_interchange(const BlockInterchange& m, int n);

Permutation apply_block_interchange(const Permutation& p,
                                    const BlockInterchange& m);

/// The interchange that undoes m once m has been applied (the same two
/// blocks, at their new positions). Always valid.
BlockInterchange inverse_interchange(const BlockInterchange& m);

/// Every valid quadruple for degree n, in lexicographic (i,k,j,l) order.
/// There are C(n+2, 4) of them.
std::vector<BlockInterchange> all_block_interchanges(int n);

/// Lazy scan in the same order; fn returns false to stop early.
/// Returns true iff the scan ran to completion.
template <typename Fn>
bool scan_block_interchanges(int n, Fn&& fn) {
  for (int i = 1; i < n; ++i)
    for (int k = i; k < n; ++k)
      for (int j = k + 1; j <= n; ++j)
        for (int l = j; l <= n; ++l)
          if (!fn(BlockInterchange{i, k, j, l})) return false;
  return true;
}

/// Change in c(G(p)) caused by applying m to p; always in {-2, 0, +2}.
/// O(n) in the degree, independent of which move is probed.
int interchange_cycle_delta(const Permutation& p, const BlockInterchange& m);

struct SortCertificate {
  Permutation source;
  std::vector<BlockInterchange> moves;
  int claimed_distance = 0;
};

/// Replays the certificate; true iff the moves transform source into the
/// identity in exactly claimed_distance steps.
bool replay_certificate(const SortCertificate& cert);

/// Sorts p with the minimum number of block interchanges. At every
/// non-identity state the valid moves are scanned in lexicographic order and
/// the first one that raises c(G) by 2 is taken; one always exists, and the
/// resulting certificate has exactly bi_distance(p) moves. If no such move
/// existed the distance formula itself would be false, so that case throws
/// invariant_violation instead of returning a longer certificate.
SortCertificate greedy_sort(const Permutation& p);

/// Exact block-interchange distances for all n! permutations of degree n
/// (2 <= n <= 7), computed by breadth-first search from the identity over
/// the move set. Serves as the independent oracle for bi_distance.
class BfsDistanceTable {
 public:
  explicit BfsDistanceTable(int n);

  int n() const { return n_; }
  std::uint64_t size() const { return dist_.size(); }

  int distance(const Permutation& p) const;
  /// Distance of the permutation with the given lexicographic rank.
  int distance_at_rank(std::uint64_t rank) const { return dist_[rank]; }

  std::map<int, std::uint64_t> histogram() const;
  Rational mean() const;

 private:
  int n_;
  std::vector<std::uint8_t> dist_;
};

inline BfsDistanceTable bfs_distance_table(int n) {
  return BfsDistanceTable(n);
}

}  // namespace blocksort

#endif  // BLOCKSORT_BLOCK_SORTER_HPP
