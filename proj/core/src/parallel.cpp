#include "blocksort/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace blocksort {

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void run_sharded(int shard_count, int jobs,
                 const std::function<void(int)>& fn) {
  if (shard_count <= 0) return;
  jobs = std::min(std::max(jobs, 1), shard_count);
  if (jobs == 1) {
    for (int s = 0; s < shard_count; ++s) fn(s);
    return;
  }

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const int s = next.fetch_add(1);
      if (s >= shard_count || failed.load()) return;
      try {
        fn(s);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace blocksort
