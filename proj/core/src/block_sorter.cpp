#include "blocksort/block_sorter.hpp"

#include <algorithm>
#include <stdexcept>

#include "blocksort/cycle_graph.hpp"
#include "blocksort/errors.hpp"

namespace blocksort {

namespace {

// Cycle structure of the alternating-step map of the sequence `image`,
// with per-vertex cycle id / position so that the effect of rewiring a
// handful of edges can be read off without retracing whole cycles.
struct CycleInfo {
  std::vector<int> succ;  // over vertices 0..n
  std::vector<int> id;
  std::vector<int> pos;
  std::vector<int> len;   // per cycle id
  int count = 0;

  void build(const std::vector<int>& image) {
    const int n = static_cast<int>(image.size());
    const int m = n + 1;
    succ.assign(static_cast<size_t>(m), 0);
    id.assign(static_cast<size_t>(m), -1);
    pos.assign(static_cast<size_t>(m), 0);
    len.clear();

    int prev = image[static_cast<size_t>(n) - 1];
    succ[0] = (prev + 1) % m;
    prev = 0;
    for (int t = 1; t <= n; ++t) {
      const int cur = image[static_cast<size_t>(t) - 1];
      succ[static_cast<size_t>(cur)] = (prev + 1) % m;
      prev = cur;
    }

    count = 0;
    for (int v = 0; v < m; ++v) {
      if (id[static_cast<size_t>(v)] >= 0) continue;
      const int c = count++;
      int length = 0;
      int x = v;
      while (id[static_cast<size_t>(x)] < 0) {
        id[static_cast<size_t>(x)] = c;
        pos[static_cast<size_t>(x)] = length++;
        x = succ[static_cast<size_t>(x)];
      }
      len.push_back(length);
    }
  }
};

// Change in the cycle count of `info` if the blocks of `mv` were exchanged
// in `image`. The interchange rewires the alternating-step map at three
// (adjacent blocks) or four vertices; removing those edges cuts the affected
// cycles into paths, and the new edges splice the paths back together. The
// delta is (#cycles formed by the splice) - (#cycles cut open). O(1).
int interchange_delta(const std::vector<int>& image, const CycleInfo& info,
                      const BlockInterchange& mv) {
  const int n = static_cast<int>(image.size());
  const int m = n + 1;
  const auto at = [&](int t) {  // extended sequence, position mod n+1
    if (t >= m) t -= m;
    return t == 0 ? 0 : image[static_cast<size_t>(t) - 1];
  };
  const auto gray = [m](int v) {
    ++v;
    return v == m ? 0 : v;
  };

  int v[4], tgt[4];
  int cnt;
  const int before_first = at(mv.i - 1), first = at(mv.i);
  const int left_end = at(mv.k), after_left = at(mv.k + 1);
  const int before_second = at(mv.j - 1), second = at(mv.j);
  const int right_end = at(mv.l), after_right = at(mv.l + 1);
  if (mv.k + 1 < mv.j) {
    v[0] = second;      tgt[0] = gray(before_first);
    v[1] = after_left;  tgt[1] = gray(right_end);
    v[2] = first;       tgt[2] = gray(before_second);
    v[3] = after_right; tgt[3] = gray(left_end);
    cnt = 4;
  } else {
    // middle segment empty: the blocks become adjacent in the other order
    v[0] = second;      tgt[0] = gray(before_first);
    v[1] = first;       tgt[1] = gray(right_end);
    v[2] = after_right; tgt[2] = gray(left_end);
    cnt = 3;
  }

  // Path starting at the old target of v[x] ends at the first rewired
  // vertex reached from there along the old cycle.
  int start[4], end_idx[4];
  for (int x = 0; x < cnt; ++x)
    start[x] = info.succ[static_cast<size_t>(v[x])];
  for (int x = 0; x < cnt; ++x) {
    const int w = start[x];
    const int cyc = info.id[static_cast<size_t>(w)];
    const int length = info.len[static_cast<size_t>(cyc)];
    int best = length + 1, best_y = -1;
    for (int y = 0; y < cnt; ++y) {
      if (info.id[static_cast<size_t>(v[y])] != cyc) continue;
      int d = info.pos[static_cast<size_t>(v[y])] -
              info.pos[static_cast<size_t>(w)];
      if (d < 0) d += length;
      if (d < best) {
        best = d;
        best_y = y;
      }
    }
    end_idx[x] = best_y;  // v[x] itself lies on w's cycle, so always found
  }

  // New edge v[x] -> tgt[x] glues the path ending at v[x] to the path
  // starting at tgt[x] (every tgt is some start, old and new targets being
  // the same value set).
  int nxt[4];
  for (int x = 0; x < cnt; ++x) {
    int y = 0;
    while (start[y] != tgt[x]) ++y;
    nxt[x] = end_idx[y];
  }

  bool visited[4] = {false, false, false, false};
  int spliced = 0;
  for (int x = 0; x < cnt; ++x) {
    if (visited[x]) continue;
    ++spliced;
    int y = x;
    while (!visited[y]) {
      visited[y] = true;
      y = nxt[y];
    }
  }

  int opened = 0;
  int ids[4];
  for (int x = 0; x < cnt; ++x) {
    const int cyc = info.id[static_cast<size_t>(v[x])];
    bool dup = false;
    for (int z = 0; z < x; ++z) dup = dup || ids[z] == cyc;
    ids[x] = cyc;
    if (!dup) ++opened;
  }
  return spliced - opened;
}

void apply_interchange_inplace(std::vector<int>& image,
                               const BlockInterchange& m) {
  std::vector<int> out;
  out.reserve(image.size());
  const auto seg = [&](int a, int b) {  // positions a..b inclusive, 1-based
    for (int t = a; t <= b; ++t)
      out.push_back(image[static_cast<size_t>(t) - 1]);
  };
  const int n = static_cast<int>(image.size());
  seg(1, m.i - 1);
  seg(m.j, m.l);
  seg(m.k + 1, m.j - 1);
  seg(m.i, m.k);
  seg(m.l + 1, n);
  image.swap(out);
}

}  // namespace

bool is_valid_interchange(const BlockInterchange& m, int n) {
  return 1 <= m.i && m.i <= m.k && m.k < m.j && m.j <= m.l && m.l <= n;
}

Permutation apply_block_interchange(const Permutation& p,
                                    const BlockInterchange& m) {
  if (!is_valid_interchange(m, p.degree()))
    throw std::invalid_argument(
        "block interchange (" + std::to_string(m.i) + "," +
        std::to_string(m.k) + "," + std::to_string(m.j) + "," +
        std::to_string(m.l) + ") has overlapping or out-of-range blocks");
  std::vector<int> image = p.image();
  apply_interchange_inplace(image, m);
  return Permutation(std::move(image));
}

BlockInterchange inverse_interchange(const BlockInterchange& m) {
  const int len_first = m.k - m.i + 1;
  const int len_second = m.l - m.j + 1;
  // After the swap the second block occupies i..i+len_second-1 and the first
  // ends at l; swapping those spans restores the original.
  return BlockInterchange{m.i, m.i + len_second - 1, m.j + len_second - len_first,
                          m.l};
}

std::vector<BlockInterchange> all_block_interchanges(int n) {
  if (n < 2)
    throw std::invalid_argument("block interchanges need degree >= 2");
  std::vector<BlockInterchange> out;
  scan_block_interchanges(n, [&](const BlockInterchange& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

int interchange_cycle_delta(const Permutation& p, const BlockInterchange& m) {
  if (!is_valid_interchange(m, p.degree()))
    throw std::invalid_argument("invalid block interchange");
  CycleInfo info;
  info.build(p.image());
  return interchange_delta(p.image(), info, m);
}

bool replay_certificate(const SortCertificate& cert) {
  if (static_cast<int>(cert.moves.size()) != cert.claimed_distance)
    return false;
  Permutation cur = cert.source;
  for (const auto& m : cert.moves) cur = apply_block_interchange(cur, m);
  return cur.is_identity();
}

SortCertificate greedy_sort(const Permutation& p) {
  const int n = p.degree();
  SortCertificate cert{p, {}, 0};
  std::vector<int> cur = p.image();
  CycleInfo info;
  info.build(cur);

  while (info.count != n + 1) {  // c(G) = n+1 only at the identity
    BlockInterchange chosen{0, 0, 0, 0};
    bool found = false;
    scan_block_interchanges(n, [&](const BlockInterchange& mv) {
      if (interchange_delta(cur, info, mv) == 2) {
        chosen = mv;
        found = true;
        return false;
      }
      return true;
    });
    if (!found)
      throw invariant_violation(
          "no cycle-increasing block interchange at a non-identity state");
    apply_interchange_inplace(cur, chosen);
    cert.moves.push_back(chosen);
    info.build(cur);
  }

  if (!std::is_sorted(cur.begin(), cur.end()))
    throw invariant_violation("greedy sort terminated off the identity");
  cert.claimed_distance = static_cast<int>(cert.moves.size());
  return cert;
}

BfsDistanceTable::BfsDistanceTable(int n) : n_(n) {
  if (n < 2 || n > 7)
    throw std::invalid_argument("bfs_distance_table supports 2 <= n <= 7");

  std::uint64_t nf = 1;
  for (int t = 2; t <= n; ++t) nf *= static_cast<std::uint64_t>(t);
  constexpr std::uint8_t kUnset = 0xFF;
  dist_.assign(nf, kUnset);

  // Position maps: applying a move permutes positions the same way for every
  // state, so each move is one gather.
  std::vector<std::vector<int>> sigmas;
  for (const auto& m : all_block_interchanges(n)) {
    std::vector<int> sigma(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) sigma[static_cast<size_t>(t)] = t;
    std::vector<int> tmp(sigma);
    for (size_t x = 0; x < tmp.size(); ++x) ++tmp[x];  // 1-based positions
    apply_interchange_inplace(tmp, m);
    for (size_t x = 0; x < tmp.size(); ++x)
      sigma[x] = tmp[x] - 1;
    sigmas.push_back(std::move(sigma));
  }

  std::vector<std::uint32_t> frontier{0};  // identity has lex rank 0
  dist_[0] = 0;
  std::vector<int> buf(static_cast<size_t>(n));
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next_frontier;
    ++level;
    for (const std::uint32_t r : frontier) {
      const Permutation s = unrank_permutation(n, r);
      const auto& img = s.image();
      for (const auto& sigma : sigmas) {
        for (int t = 0; t < n; ++t)
          buf[static_cast<size_t>(t)] =
              img[static_cast<size_t>(sigma[static_cast<size_t>(t)])];
        const std::uint64_t tr = rank_permutation(Permutation(buf));
        if (dist_[tr] == kUnset) {
          dist_[tr] = level;
          next_frontier.push_back(static_cast<std::uint32_t>(tr));
        }
      }
    }
    frontier.swap(next_frontier);
  }
}

int BfsDistanceTable::distance(const Permutation& p) const {
  if (p.degree() != n_)
    throw std::invalid_argument("distance table is for degree " +
                                std::to_string(n_));
  return dist_[rank_permutation(p)];
}

std::map<int, std::uint64_t> BfsDistanceTable::histogram() const {
  std::map<int, std::uint64_t> h;
  for (const std::uint8_t d : dist_) ++h[d];
  return h;
}

Rational BfsDistanceTable::mean() const {
  BigInt total = 0;
  for (const std::uint8_t d : dist_) total += static_cast<long>(d);
  return make_rational(total, BigInt(static_cast<long>(dist_.size())));
}

}  // namespace blocksort
