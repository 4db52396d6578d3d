#ifndef BLOCKSORT_REPORTS_HPP
#define BLOCKSORT_REPORTS_HPP

#include <cstdint>
#include <string>

#include "blocksort/hultman.hpp"
#include "blocksort/perm.hpp"

namespace blocksort {

// Machine-readable reports behind the CLI subcommands. JSON documents carry
// "schema": "blocksort/1"; exact values are serialized as "num/den" strings.

std::string distance_report(const Permutation& p);

/// Certificate with "moves" as [i,k,j,l] quadruples and "states" as the full
/// trajectory from the input to the identity (distance + 1 entries).
std::string sort_report(const Permutation& p);

/// Debug export of the bicolored graph: black/gray edge lists, the
/// alternating cycles, and their count.
std::string graph_report(const Permutation& p);

struct ProbOptions {
  int h = 4;
  bool exact = true;
  std::int64_t trials = 1000000;
  std::uint64_t seed = 0;
  int i = 1, j = 2;
  int jobs = 1;
};

/// Same-cycle probability report. Exact mode enumerates (all pairs for
/// h <= 7, the reduced scan for h <= 10); Monte Carlo mode records hits,
/// trials, seed, jobs and the standard error. "agrees" compares against the
/// closed form (equality when exact, within 4 standard errors when sampled).
std::string prob_report(const ProbOptions& opt);

std::string hultman_csv(int n, HultmanMethod method);
std::string table_csv(int max_n);
std::string averages_csv(int max_n, int brute_max);

}  // namespace blocksort

#endif  // BLOCKSORT_REPORTS_HPP
