#ifndef BLOCKSORT_CYCLE_GRAPH_HPP
#define BLOCKSORT_CYCLE_GRAPH_HPP

#include <utility>
#include <vector>

#include "blocksort/perm.hpp"

namespace blocksort {

/// The bicolored graph on vertices {0..n} attached to a permutation
/// p = p_1..p_n (with p_0 = 0, positions read modulo n+1):
///   black edge  p_i -> p_{i-1}
///   gray edge   v   -> v+1 (mod n+1)
/// It decomposes uniquely into edge-disjoint cycles of alternating color.
/// Following one black edge and then the gray edge out of its head is a
/// bijection on the vertex set, stored here as `successor`; its cycles are
/// exactly the alternating cycles, so nothing beyond the map is kept.
class CycleGraph {
 public:
  explicit CycleGraph(const Permutation& p);

  int n() const { return n_; }

  /// successor[v] over vertices 0..n; successor[p_i] = p_{i-1} + 1 (mod n+1).
  const std::vector<int>& successor() const { return successor_; }

  /// Number of alternating cycles c(G(p)).
  int cycle_count() const { return cycle_count_; }

  /// Vertex lists of the alternating cycles, each opened at its minimum
  /// vertex, sorted by minimum. Vertex 0's cycle comes first.
  std::vector<std::vector<int>> cycles() const;

  /// Full edge lists for debug export.
  std::vector<std::pair<int, int>> black_edges() const;
  std::vector<std::pair<int, int>> gray_edges() const;

 private:
  int n_;
  std::vector<int> successor_;
  std::vector<int> source_image_;
  int cycle_count_;
};

inline CycleGraph build_cycle_graph(const Permutation& p) {
  return CycleGraph(p);
}

inline int alternating_cycle_count(const CycleGraph& g) {
  return g.cycle_count();
}

int alternating_cycle_count(const Permutation& p);

/// Minimum number of block interchanges needed to sort p:
/// (n + 1 - c(G(p))) / 2. Throws invariant_violation if the difference were
/// odd (n+1 and c(G(p)) always share parity).
int bi_distance(const Permutation& p);

}  // namespace blocksort

#endif  // BLOCKSORT_CYCLE_GRAPH_HPP
