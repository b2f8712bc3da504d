#include <adnil/staircase.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace adnil {
namespace {

// Upper bound for the (0-based) position pos given the part before it.
int part_bound(int rank, std::span<const int> parts, std::size_t pos) {
  const int staircase = rank - static_cast<int>(pos);
  return pos == 0 ? staircase : std::min(parts[pos - 1], staircase);
}

}  // namespace

StaircasePartition StaircasePartition::make(std::span<const int> parts, int rank) {
  if (rank < 0) throw std::invalid_argument("rank must be non-negative");
  std::vector<int> v(static_cast<std::size_t>(rank), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int value = parts[i];
    if (value < 0) throw std::invalid_argument("partition part " + std::to_string(i + 1) + " is negative");
    if (i > 0 && value > parts[i - 1])
      throw std::invalid_argument("partition is not weakly decreasing at part " + std::to_string(i + 1));
    if (i >= v.size()) {
      if (value != 0) throw std::invalid_argument("partition has more than " + std::to_string(rank) + " nonzero parts");
      continue;
    }
    const int bound = rank - static_cast<int>(i);
    if (value > bound)
      throw std::invalid_argument("part " + std::to_string(i + 1) + " = " + std::to_string(value) +
                                  " exceeds staircase bound " + std::to_string(bound));
    v[i] = value;
  }
  return StaircasePartition(std::move(v));
}

StaircasePartition StaircasePartition::zero(int rank) { return make({}, rank); }

StaircasePartition StaircasePartition::full_staircase(int rank) {
  std::vector<int> v(static_cast<std::size_t>(std::max(rank, 0)));
  for (int i = 0; i < rank; ++i) v[static_cast<std::size_t>(i)] = rank - i;
  return StaircasePartition(std::move(v));
}

int StaircasePartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool StaircasePartition::contains(const StaircasePartition& other) const {
  if (other.rank() != rank()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string StaircasePartition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  return out.str();
}

StaircasePartition parse_partition(std::string_view literal, int rank) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(literal).empty()) return StaircasePartition::make(parts, rank);
  while (pos <= literal.size()) {
    const std::size_t comma = std::min(literal.find(',', pos), literal.size());
    const std::string_view token = trim(literal.substr(pos, comma - pos));
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw std::invalid_argument("malformed partition literal '" + std::string(literal) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return StaircasePartition::make(parts, rank);
}

std::vector<RootCell> ideal_roots(const StaircasePartition& p) {
  std::vector<RootCell> cells;
  cells.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.rank(); ++i)
    for (int j = 1; j <= p.part(i); ++j) cells.push_back(RootCell::at(i, j, p.rank()));
  return cells;
}

std::vector<RootCell> corner_cells(const StaircasePartition& p) {
  std::vector<RootCell> cells;
  for (int i = 1; i <= p.rank(); ++i) {
    const int len = p.part(i);
    if (len > 0 && p.part(i + 1) < len) cells.push_back(RootCell::at(i, len, p.rank()));
  }
  return cells;
}

BigInt dimension(const StaircasePartition& p) { return p.size(); }

PartitionRange::PartitionRange(int rank) : PartitionRange(rank, {}) {}

PartitionRange::PartitionRange(int rank, std::vector<int> prefix) : rank_(rank), prefix_(std::move(prefix)) {
  if (rank < 0) throw std::invalid_argument("rank must be non-negative");
  if (prefix_.size() > static_cast<std::size_t>(rank)) throw std::invalid_argument("prefix longer than rank");
  // Validates the prefix against the staircase.
  (void)StaircasePartition::make(prefix_, rank);
}

PartitionRange::iterator PartitionRange::begin() const {
  std::vector<int> first(static_cast<std::size_t>(rank_), 0);
  std::copy(prefix_.begin(), prefix_.end(), first.begin());
  return iterator(StaircasePartition(std::move(first)), prefix_.size(), false);
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  std::vector<int>& parts = current_.parts_;
  const int rank = static_cast<int>(parts.size());
  // Lexicographic successor: bump the rightmost free position that can grow
  // and reset everything after it to zero.
  for (std::size_t pos = parts.size(); pos-- > fixed_;) {
    if (parts[pos] < part_bound(rank, parts, pos)) {
      ++parts[pos];
      std::fill(parts.begin() + static_cast<std::ptrdiff_t>(pos) + 1, parts.end(), 0);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

std::vector<PartitionRange> PartitionRange::split(int prefix_length) const {
  const std::size_t target = static_cast<std::size_t>(std::clamp(prefix_length, 0, rank_));
  if (target <= prefix_.size()) return {*this};
  std::vector<PartitionRange> out;
  std::vector<int> cur = prefix_;
  // Depth-first over the free prefix positions, smallest values first.
  auto extend = [&](auto&& self) -> void {
    if (cur.size() == target) {
      out.emplace_back(rank_, cur);
      return;
    }
    const int bound = part_bound(rank_, cur, cur.size());
    for (int v = 0; v <= bound; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  extend(extend);
  return out;
}

PartitionRange enumerate_all(int rank) {
  if (rank < 1) throw std::invalid_argument("enumerate_all: rank must be at least 1");
  return PartitionRange(rank);
}

}  // namespace adnil
