#pragma once

#include <adnil/bigint.hpp>
#include <adnil/staircase.hpp>

#include <span>
#include <string>
#include <vector>

namespace adnil {

/// The table t_{i,j} over the staircase. t_{1,1} is the class of
/// nilpotence; in general t_{i,j} is the largest m such that the root of cell
/// (i,j) lies in the m-th term of the lower central series.
class NilpotenceFilling {
 public:
  explicit NilpotenceFilling(int rank);

  int rank() const { return rank_; }
  /// 1-based; 0 for anything outside the staircase.
  int at(int i, int j) const;
  void set(int i, int j, int value);
  /// Row i (1-based), n - i + 1 entries.
  std::span<const int> row(int i) const;
  std::vector<std::vector<int>> rows() const;

 private:
  std::size_t offset(int i) const;

  int rank_;
  std::vector<int> cells_;
};

NilpotenceFilling compute_filling(const StaircasePartition& p);

int class_tableau(const StaircasePartition& p);
int class_fast(const StaircasePartition& p);
/// Same recursion on a raw part list; the rank is parts.size(). No validation.
int class_fast(std::span<const int> parts);

struct TouchSequence {
  int rank = 0;
  std::vector<int> indices;  // i_1 < ... < i_k

  int length() const { return static_cast<int>(indices.size()); }
  std::string to_string() const;
  friend bool operator==(const TouchSequence&, const TouchSequence&) = default;
};

/// Throws std::invalid_argument unless 0 < i_1 < ... < i_k < rank + 1.
TouchSequence make_touch_sequence(std::vector<int> indices, int rank);

TouchSequence touch_sequence(const StaircasePartition& p);

struct IntervalBounds {
  StaircasePartition lower;  // lambda^m
  StaircasePartition upper;  // lambda^M
};

IntervalBounds interval_bounds(const TouchSequence& ts);

/// Product of binomials counting the partitions with this touch sequence.
BigInt interval_size(const TouchSequence& ts);

struct Interval {
  TouchSequence touch;
  StaircasePartition lower;
  StaircasePartition upper;
  BigInt size;
};

/// One interval per subset of {1..n}, ordered by length then lexicographically.
std::vector<Interval> decomposition(int rank);

struct AffineWindow {
  int rank = 0;
  std::vector<long long> values;  // w^{-1}(1), ..., w^{-1}(n+1)

  bool sum_ok() const;
  bool residues_distinct() const;
};

AffineWindow affine_window(const StaircasePartition& p);
AffineWindow affine_window(const NilpotenceFilling& t);

/// Rounds toward negative infinity.
constexpr long long floor_div(long long a, long long b) {
  const long long q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

struct InversionEntry {
  RootCell cell;
  int level = 0;
  friend bool operator==(const InversionEntry&, const InversionEntry&) = default;
};

/// {(cell, h) : 1 <= h <= t(cell)}, cells in row-major order.
std::vector<InversionEntry> inversion_levels(const StaircasePartition& p);

}  // namespace adnil
