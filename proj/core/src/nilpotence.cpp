#include <adnil/combinatorics.hpp>
#include <adnil/nilpotence.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace adnil {

NilpotenceFilling::NilpotenceFilling(int rank)
    : rank_(rank), cells_(static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank + 1) / 2, 0) {}

// Rows are stored back to back; row i starts after rows 1..i-1.
std::size_t NilpotenceFilling::offset(int i) const {
  const auto before = static_cast<std::size_t>(i - 1);
  return before * static_cast<std::size_t>(rank_) - before * (before - 1) / 2;
}

int NilpotenceFilling::at(int i, int j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_ - i + 1) return 0;
  return cells_[offset(i) + static_cast<std::size_t>(j - 1)];
}

void NilpotenceFilling::set(int i, int j, int value) {
  if (i < 1 || i > rank_ || j < 1 || j > rank_ - i + 1) throw std::out_of_range("filling cell outside staircase");
  cells_[offset(i) + static_cast<std::size_t>(j - 1)] = value;
}

std::span<const int> NilpotenceFilling::row(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("filling row outside staircase");
  return std::span<const int>(cells_).subspan(offset(i), static_cast<std::size_t>(rank_ - i + 1));
}

std::vector<std::vector<int>> NilpotenceFilling::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= rank_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

NilpotenceFilling compute_filling(const StaircasePartition& p) {
  const int n = p.rank();
  NilpotenceFilling t(n);
  // Both dependencies of (i,j) have a larger i + j, so sweep anti-diagonals
  // from the outer edge inward.
  for (int s = n + 1; s >= 2; --s) {
    for (int i = std::max(1, s - n); i <= std::min(n, s - 1); ++i) {
      const int j = s - i;
      if (j > n - i + 1 || j > p.part(i)) continue;
      if (j == p.part(i) && p.part(i + 1) < j) {
        t.set(i, j, 1);
        continue;
      }
      int best = 0;
      for (int k = j + 1; k <= n - i + 1; ++k) best = std::max(best, t.at(i, k) + t.at(n - k + 2, j));
      t.set(i, j, best);
    }
  }
  return t;
}

int class_tableau(const StaircasePartition& p) { return compute_filling(p).at(1, 1); }

int class_fast(std::span<const int> parts) {
  int k = 0;
  while (!parts.empty() && parts.front() > 0) {
    const auto lead = static_cast<std::size_t>(parts.front());
    parts = parts.subspan(parts.size() + 1 - lead, lead - 1);
    ++k;
  }
  return k;
}

int class_fast(const StaircasePartition& p) { return class_fast(p.parts()); }

std::string TouchSequence::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < indices.size(); ++i) out << (i ? "," : "") << indices[i];
  out << ')';
  return out.str();
}

TouchSequence make_touch_sequence(std::vector<int> indices, int rank) {
  int prev = 0;
  for (int v : indices) {
    if (v <= prev || v > rank) throw std::invalid_argument("touch sequence must be strictly increasing within 1..n");
    prev = v;
  }
  return TouchSequence{rank, std::move(indices)};
}

TouchSequence touch_sequence(const StaircasePartition& p) {
  const int n = p.rank();
  std::vector<int> rev;
  for (int i = p.part(1); i > 0; i = p.part(n - i + 2)) rev.push_back(i);
  std::reverse(rev.begin(), rev.end());
  return TouchSequence{n, std::move(rev)};
}

IntervalBounds interval_bounds(const TouchSequence& ts) {
  const int n = ts.rank;
  const int k = ts.length();
  // idx(j) is i_j with i_0 = 0 and i_{k+1} = n + 1.
  auto idx = [&](int j) { return j == 0 ? 0 : j == k + 1 ? n + 1 : ts.indices[static_cast<std::size_t>(j - 1)]; };

  std::vector<int> upper, lower;
  if (k > 0) {
    upper.assign(static_cast<std::size_t>(n - idx(k) + 1), idx(k));
    for (int j = k - 1; j >= 1; --j) upper.insert(upper.end(), static_cast<std::size_t>(idx(j + 1) - idx(j)), idx(j));

    lower.push_back(idx(k));
    for (int j = k - 1; j >= 1; --j) lower.insert(lower.end(), static_cast<std::size_t>(idx(j + 2) - idx(j + 1)), idx(j));
  }
  return {StaircasePartition::make(lower, n), StaircasePartition::make(upper, n)};
}

BigInt interval_size(const TouchSequence& ts) {
  const int n = ts.rank;
  const int k = ts.length();
  auto idx = [&](int j) { return j == 0 ? 0 : j == k + 1 ? n + 1 : ts.indices[static_cast<std::size_t>(j - 1)]; };
  BigInt size = 1;
  for (int j = 0; j < k; ++j) size *= binomial(idx(j + 2) - idx(j) - 1, idx(j + 1) - idx(j));
  return size;
}

std::vector<Interval> decomposition(int rank) {
  if (rank < 1) throw std::invalid_argument("decomposition: rank must be at least 1");
  std::vector<Interval> out;
  std::vector<int> chosen;
  for (int k = 0; k <= rank; ++k) {
    // Lexicographic k-subsets of 1..rank.
    chosen.resize(static_cast<std::size_t>(k));
    std::iota(chosen.begin(), chosen.end(), 1);
    while (true) {
      TouchSequence ts{rank, chosen};
      IntervalBounds b = interval_bounds(ts);
      BigInt size = interval_size(ts);
      out.push_back(Interval{std::move(ts), std::move(b.lower), std::move(b.upper), std::move(size)});
      int pos = k - 1;
      while (pos >= 0 && chosen[static_cast<std::size_t>(pos)] == rank - (k - 1 - pos)) --pos;
      if (pos < 0) break;
      ++chosen[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < k; ++q) chosen[static_cast<std::size_t>(q)] = chosen[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

bool AffineWindow::sum_ok() const {
  const long long sum = std::accumulate(values.begin(), values.end(), 0LL);
  return sum == static_cast<long long>(rank + 2) * (rank + 1) / 2;
}

bool AffineWindow::residues_distinct() const {
  const long long m = rank + 1;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (long long v : values) {
    const auto r = static_cast<std::size_t>(((v % m) + m) % m);
    if (seen[r]) return false;
    seen[r] = true;
  }
  return values.size() == static_cast<std::size_t>(m);
}

AffineWindow affine_window(const NilpotenceFilling& t) {
  const int n = t.rank();
  AffineWindow w{n, std::vector<long long>(static_cast<std::size_t>(n + 1))};
  for (int i = 1; i <= n + 1; ++i) {
    long long v = i;
    for (int j = 1; j < i; ++j) v += t.at(j, n - i + 2);
    for (int j = i + 1; j <= n + 1; ++j) v -= t.at(i, n - j + 2);
    w.values[static_cast<std::size_t>(i - 1)] = v;
  }
  return w;
}

AffineWindow affine_window(const StaircasePartition& p) { return affine_window(compute_filling(p)); }

std::vector<InversionEntry> inversion_levels(const StaircasePartition& p) {
  const NilpotenceFilling t = compute_filling(p);
  std::vector<InversionEntry> out;
  for (const RootCell& c : ideal_roots(p))
    for (int h = 1; h <= t.at(c.row, c.col); ++h) out.push_back({c, h});
  return out;
}

}  // namespace adnil
