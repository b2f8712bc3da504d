#pragma once

#include <adnil/staircase.hpp>

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace adnil {

/// Hardware concurrency, at least 1.
int default_jobs();

/// Shards of the full enumeration at `rank`, enough to balance `jobs` workers.
std::vector<PartitionRange> plan_shards(int rank, int jobs);

/// Folds `visit(acc, partition)` over every partition at `rank`. Each shard
/// gets its own accumulator (copied from `init`); shard results are merged in
/// enumeration order with `merge(into, from)`, so the outcome does not depend
/// on the schedule as long as `merge` is associative.
template <class Acc, class Visit, class Merge>
Acc reduce_partitions(int rank, int jobs, const Acc& init, Visit visit, Merge merge) {
  if (jobs < 1) jobs = default_jobs();
  const std::vector<PartitionRange> shards = plan_shards(rank, jobs);
  std::vector<Acc> partial(shards.size(), init);

  auto run_shard = [&](std::size_t s) {
    for (const StaircasePartition& p : shards[s]) visit(partial[s], p);
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), shards.size());
  if (workers <= 1) {
    for (std::size_t s = 0; s < shards.size(); ++s) run_shard(s);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t s = next++; s < shards.size(); s = next++) {
          try {
            run_shard(s);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  Acc total = init;
  for (Acc& part : partial) merge(total, std::move(part));
  return total;
}

}  // namespace adnil
