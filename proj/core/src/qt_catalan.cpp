#include <adnil/combinatorics.hpp>
#include <adnil/nilpotence.hpp>
#include <adnil/parallel.hpp>
#include <adnil/qt_catalan.hpp>

#include <boost/multiprecision/integer.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace adnil {

BiPoly qt_catalan_formula(int n) {
  if (n < 1) throw std::invalid_argument("qt_catalan_formula: n must be at least 1");
  std::map<std::pair<int, int>, UniPoly> gauss;
  auto tb = [&](int m, int r) -> const UniPoly& {
    auto [it, fresh] = gauss.try_emplace({m, r});
    if (fresh) it->second = t_binomial(m, r);
    return it->second;
  };

  BiPoly total;
  std::vector<int> seq{0};  // i_0, i_1, ..., i_k
  // For each subset {i_1 < ... < i_k}, append n+1 and n+2 and multiply the k
  // factors t^{i_{j+1}(i_{j+3}-i_{j+2})} [i_{j+2}-i_j-1, i_{j+1}-i_j]_t.
  auto finish = [&] {
    const int k = static_cast<int>(seq.size()) - 1;
    std::vector<int> i = seq;
    i.push_back(n + 1);
    i.push_back(n + 2);
    UniPoly term = UniPoly::constant(1);
    int shift = 0;
    for (int j = 0; j < k; ++j) {
      const auto u = static_cast<std::size_t>(j);
      const UniPoly& g = tb(i[u + 2] - i[u] - 1, i[u + 1] - i[u]);
      if (g.is_zero()) return;
      term *= g;
      shift += i[u + 1] * (i[u + 3] - i[u + 2]);
    }
    total.add_scaled(k, shift, term);
  };
  auto rec = [&](auto&& self) -> void {
    finish();
    for (int v = seq.back() + 1; v <= n; ++v) {
      seq.push_back(v);
      self(self);
      seq.pop_back();
    }
  };
  rec(rec);
  return total;
}

BiPoly qt_catalan_bruteforce(int n, const BruteOptions& options) {
  require_feasible(n, options.allow_large);
  const std::size_t dims = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2 + 1;
  using Tally = std::vector<std::uint64_t>;  // [class * dims + dimension]
  const Tally tally = reduce_partitions(
      n, options.jobs, Tally(static_cast<std::size_t>(n + 1) * dims, 0),
      [dims](Tally& acc, const StaircasePartition& p) {
        ++acc[static_cast<std::size_t>(class_fast(p)) * dims + static_cast<std::size_t>(p.size())];
      },
      [](Tally& into, Tally&& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });
  BiPoly out;
  for (std::size_t i = 0; i < tally.size(); ++i)
    if (tally[i] != 0) out.add_term(static_cast<int>(i / dims), static_cast<int>(i % dims), tally[i]);
  return out;
}

namespace {

void check_class(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 0 || k > n)
    throw std::invalid_argument("class " + std::to_string(k) + " out of range 0.." + std::to_string(n));
}

void check_dimension(int n, long long A) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const long long top = static_cast<long long>(n) * (n + 1) / 2;
  if (A < 0 || A > top)
    throw std::invalid_argument("dimension " + std::to_string(A) + " out of range 0.." + std::to_string(top));
}

}  // namespace

BigInt theta_min(int n, int k) {
  check_class(n, k);
  if (k == 0) return 0;
  return binomial(k + 1, 2) + BigInt(k - 1) * (n - k);
}

BigInt theta_max(int n, int k) {
  check_class(n, k);
  if (k == 0) return 0;
  const int f = (n + 1) / (k + 1);
  return binomial(n + 1, 2) - BigInt(n + 1) * f + BigInt(k + 1) * binomial(f + 1, 2);
}

int Theta_min(int n, long long A) {
  check_dimension(n, A);
  int k = 0;
  while (theta_max(n, k) < A) ++k;
  return k;
}

int Theta_max_search(int n, long long A) {
  check_dimension(n, A);
  int k = 0;
  while (k < n && theta_min(n, k + 1) <= A) ++k;
  return k;
}

int Theta_max(int n, long long A) {
  check_dimension(n, A);
  if (A == 0) return 0;
  // floor((2n + 3 - sqrt(D)) / 2) without leaving the integers.
  const long long D = 4LL * n * n + 4LL * n + 9 - 8 * A;
  const long long s = static_cast<long long>(boost::multiprecision::sqrt(BigInt(D)));
  const long long x = 2LL * n + 3 - s;
  const long long k = s * s == D ? floor_div(x, 2) : floor_div(x - 1, 2);
  const int searched = Theta_max_search(n, A);
  if (k != searched)
    throw std::logic_error("Theta_max closed form " + std::to_string(k) + " disagrees with search " +
                           std::to_string(searched));
  return searched;
}

CornerComposition make_corner_composition(std::vector<int> parts, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  long long sum = 0;
  for (int v : parts) {
    if (v < 1) throw std::invalid_argument("composition parts must be positive");
    sum += v;
  }
  if (sum != rank + 1) throw std::invalid_argument("composition must sum to n+1");
  return CornerComposition{rank, std::move(parts)};
}

StaircasePartition corner_partition(const CornerComposition& mu) {
  const int n = mu.rank;
  std::vector<int> rows(static_cast<std::size_t>(n), 0);
  int prev = n + 1;  // c_{j-1}
  for (std::size_t j = 0; j + 1 < mu.parts.size(); ++j) {
    const int c = prev - mu.parts[j];
    for (int r = n + 2 - prev; r <= n + 1 - c; ++r)
      if (r >= 1 && r <= n) rows[static_cast<std::size_t>(r - 1)] = c;
    prev = c;
  }
  return StaircasePartition::make(rows, n);
}

CornerComposition balanced_composition(int n, int k) {
  check_class(n, k);
  const int f = (n + 1) / (k + 1);
  const int big = n + 1 - (k + 1) * f;
  std::vector<int> parts(static_cast<std::size_t>(k + 1), f);
  for (int j = 0; j < big; ++j) ++parts[static_cast<std::size_t>(j)];
  return CornerComposition{n, std::move(parts)};
}

ExtremalWitness extremal_witness(int n, int k) {
  check_class(n, k);
  if (k == 0) throw std::invalid_argument("extremal_witness needs class at least 1");
  std::vector<int> first(static_cast<std::size_t>(k));
  std::iota(first.begin(), first.end(), 1);
  return {interval_bounds(TouchSequence{n, std::move(first)}).lower, corner_partition(balanced_composition(n, k))};
}

}  // namespace adnil
