#ifndef BLOCKSORT_PARALLEL_HPP
#define BLOCKSORT_PARALLEL_HPP

#include <functional>

namespace blocksort {

// Number of hardware threads, at least 1.
int default_jobs();

// Runs fn(shard) for every shard in [0, shard_count), claiming shards
// dynamically across at most `jobs` threads (jobs <= 1 runs inline).
// Callers must write results into per-shard slots and merge them in shard
// order afterwards; that makes the outcome independent of `jobs`.
// The first exception thrown by any shard is rethrown after all workers stop.
void run_sharded(int shard_count, int jobs, const std::function<void(int)>& fn);

}  // namespace blocksort

#endif  // BLOCKSORT_PARALLEL_HPP
