#include <adnil/parallel.hpp>

#include <algorithm>

namespace adnil {

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<PartitionRange> plan_shards(int rank, int jobs) {
  PartitionRange all(rank);
  if (jobs <= 1 || rank < 2) return {all};
  // Prefixes of length 2 give O(rank^2) shards; go to 3 only for many workers.
  const int prefix = jobs > 8 && rank > 6 ? 3 : 2;
  return all.split(prefix);
}

}  // namespace adnil
