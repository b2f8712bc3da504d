#pragma once

#include <adnil/bigint.hpp>

#include <compare>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adnil {

/// A partition lambda_1 >= ... >= lambda_n >= 0 inside the staircase
/// (n, n-1, ..., 1). Each one models an ad-nilpotent ideal of the Borel
/// subalgebra of sl(n+1). The rank n is part of the value: the same part list
/// at a different rank is a different ideal.
class StaircasePartition {
 public:
  /// Validating factory. Pads with zeros to exactly `rank` parts; trailing
  /// zeros beyond `rank` are accepted and dropped. Throws std::invalid_argument
  /// on a negative part, an increase, a part above the staircase bound
  /// n - i + 1, more than `rank` nonzero parts, or rank < 0.
  static StaircasePartition make(std::span<const int> parts, int rank);

  static StaircasePartition zero(int rank);
  static StaircasePartition full_staircase(int rank);

  int rank() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }

  /// lambda_i with 1-based i; 0 for i > rank.
  int part(int i) const { return i >= 1 && i <= rank() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

  bool is_zero() const { return parts_.empty() || parts_.front() == 0; }
  int size() const;

  /// Cell (i, j), both 1-based.
  bool contains_cell(int i, int j) const { return j >= 1 && j <= part(i); }
  /// Cell-wise inclusion at equal rank.
  bool contains(const StaircasePartition& other) const;

  /// Comma-separated parts, e.g. "3,1,0".
  std::string to_string() const;

  friend bool operator==(const StaircasePartition&, const StaircasePartition&) = default;
  friend auto operator<=>(const StaircasePartition&, const StaircasePartition&) = default;

 private:
  friend class PartitionRange;
  explicit StaircasePartition(std::vector<int> parts) : parts_(std::move(parts)) {}

  std::vector<int> parts_;
};

inline StaircasePartition make_partition(std::span<const int> parts, int rank) {
  return StaircasePartition::make(parts, rank);
}

/// Parses the literal "a,b,c,..." (whitespace tolerated) at the given rank.
StaircasePartition parse_partition(std::string_view literal, int rank);

/// Cell (row, col) of the staircase, identified with the positive root
/// alpha_first + ... + alpha_last where first = row and last = n - col + 1.
struct RootCell {
  int row = 0;
  int col = 0;
  int first = 0;
  int last = 0;

  static RootCell at(int row, int col, int rank) { return {row, col, row, rank - col + 1}; }

  friend bool operator==(const RootCell&, const RootCell&) = default;
  friend auto operator<=>(const RootCell&, const RootCell&) = default;
};

/// All cells {(i, j) : 1 <= j <= lambda_i}, sorted by (row, col).
std::vector<RootCell> ideal_roots(const StaircasePartition& p);

/// Cells (i, lambda_i) with lambda_i > 0 and lambda_{i+1} < lambda_i.
std::vector<RootCell> corner_cells(const StaircasePartition& p);

/// Number of root spaces in the ideal, |lambda|.
BigInt dimension(const StaircasePartition& p);

/// All staircase partitions of a rank sharing a fixed prefix, in
/// lexicographic order of parts, smallest first. Ranges produced by split()
/// are disjoint and concatenate (in order) to the parent range.
class PartitionRange {
 public:
  explicit PartitionRange(int rank);
  PartitionRange(int rank, std::vector<int> prefix);

  int rank() const { return rank_; }
  std::span<const int> prefix() const { return prefix_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = StaircasePartition;
    using difference_type = std::ptrdiff_t;
    using reference = const StaircasePartition&;
    using pointer = const StaircasePartition*;

    iterator() = default;
    const StaircasePartition& operator*() const { return current_; }
    const StaircasePartition* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator before = *this;
      ++*this;
      return before;
    }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    friend class PartitionRange;
    iterator(StaircasePartition first, std::size_t fixed, bool done)
        : current_(std::move(first)), fixed_(fixed), done_(done) {}

    StaircasePartition current_{std::vector<int>{}};
    std::size_t fixed_ = 0;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return {}; }

  /// Splits into sub-ranges whose prefixes have length
  /// min(prefix_length, rank). Never returns an empty vector.
  std::vector<PartitionRange> split(int prefix_length) const;

 private:
  int rank_;
  std::vector<int> prefix_;
};

/// Every ideal at rank n (C_{n+1} of them), lexicographic smallest first.
PartitionRange enumerate_all(int rank);

}  // namespace adnil
