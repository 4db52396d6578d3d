#include "blocksort/cycle_graph.hpp"

#include "blocksort/errors.hpp"

namespace blocksort {

CycleGraph::CycleGraph(const Permutation& p)
    : n_(p.degree()),
      successor_(static_cast<size_t>(p.degree()) + 1),
      source_image_(p.image()) {
  const int m = n_ + 1;
  // successor[p_t] = p_{t-1} + 1 (mod n+1), with p_0 = 0 and p_{-1} = p_n.
  int prev = source_image_[static_cast<size_t>(n_) - 1];
  successor_[0] = (prev + 1) % m;
  prev = 0;
  for (int t = 1; t <= n_; ++t) {
    const int cur = source_image_[static_cast<size_t>(t) - 1];
    successor_[static_cast<size_t>(cur)] = (prev + 1) % m;
    prev = cur;
  }

  std::vector<char> seen(static_cast<size_t>(m), 0);
  cycle_count_ = 0;
  for (int v = 0; v < m; ++v) {
    if (seen[static_cast<size_t>(v)]) continue;
    ++cycle_count_;
    int x = v;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      x = successor_[static_cast<size_t>(x)];
    }
  }
}

std::vector<std::vector<int>> CycleGraph::cycles() const {
  const int m = n_ + 1;
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<size_t>(m), 0);
  for (int v = 0; v < m; ++v) {
    if (seen[static_cast<size_t>(v)]) continue;
    std::vector<int> cyc;
    int x = v;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      cyc.push_back(x);
      x = successor_[static_cast<size_t>(x)];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::pair<int, int>> CycleGraph::black_edges() const {
  const int m = n_ + 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  int prev = source_image_[static_cast<size_t>(n_) - 1];  // p_{-1} = p_n
  edges.emplace_back(0, prev);
  prev = 0;
  for (int t = 1; t <= n_; ++t) {
    const int cur = source_image_[static_cast<size_t>(t) - 1];
    edges.emplace_back(cur, prev);
    prev = cur;
  }
  return edges;
}

std::vector<std::pair<int, int>> CycleGraph::gray_edges() const {
  const int m = n_ + 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int v = 0; v < m; ++v) edges.emplace_back(v, (v + 1) % m);
  return edges;
}

int alternating_cycle_count(const Permutation& p) {
  return CycleGraph(p).cycle_count();
}

int bi_distance(const Permutation& p) {
  const int n = p.degree();
  const int c = alternating_cycle_count(p);
  const int diff = n + 1 - c;
  if (diff % 2 != 0)
    throw invariant_violation(
        "n + 1 - c(G(p)) is odd; the parity law is violated");
  return diff / 2;
}

}  // namespace blocksort
