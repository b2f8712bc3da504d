#include <adnil/combinatorics.hpp>
#include <adnil/enumeration.hpp>
#include <adnil/nilpotence.hpp>
#include <adnil/parallel.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace adnil {
namespace {

enum class Steps { strict, weak, strict_after_zeros };

bool step_allowed(Steps rule, int from, int to) {
  switch (rule) {
    case Steps::strict: return to > from;
    case Steps::weak: return to >= from;
    case Steps::strict_after_zeros: return to > from || (to == 0 && from == 0);
  }
  return false;
}

// Sums prod_{j<m} binomial(i_{j+2} - i_j - 1, i_{j+1} - i_j) over index
// sequences 0 = i_0, i_1, ..., i_m, i_{m+1} = n + 1 obeying `rule`.
// Each factor only sees three consecutive indices, so run a transfer matrix
// on pairs (i_{j-1}, i_j).
BigInt index_sum(int n, int m, Steps rule) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  const int top = n + 1;
  const auto width = static_cast<std::size_t>(top + 1);
  auto at = [width](std::vector<BigInt>& v, int a, int b) -> BigInt& {
    return v[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(b)];
  };

  std::vector<BigInt> cur(width * width), next(width * width);
  for (int b = 0; b <= top; ++b)
    if (step_allowed(rule, 0, b)) at(cur, 0, b) = 1;

  for (int step = 2; step <= m + 1; ++step) {
    std::fill(next.begin(), next.end(), BigInt(0));
    const int lo = step == m + 1 ? top : 0;
    for (int a = 0; a <= top; ++a) {
      for (int b = a; b <= top; ++b) {
        const BigInt& w = at(cur, a, b);
        if (w.is_zero()) continue;
        for (int c = std::max(lo, b); c <= top; ++c) {
          if (!step_allowed(rule, b, c)) continue;
          const BigInt f = binomial(c - a - 1, b - a);
          if (!f.is_zero()) at(next, b, c) += w * f;
        }
      }
    }
    std::swap(cur, next);
  }

  BigInt total = 0;
  for (int b = 0; b <= top; ++b) total += at(cur, b, top);
  return total;
}

}  // namespace

BigInt count_exact_class(int n, int k) { return k > n ? BigInt(0) : index_sum(n, k, Steps::strict); }

BigInt count_atmost_sum(int n, int h) { return index_sum(n, h, Steps::weak); }

BigInt count_atmost_sum_filtered(int n, int h) { return index_sum(n, h, Steps::strict_after_zeros); }

BigMatrix count_matrix(int n, int h, DetVariant variant) {
  BigMatrix m(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const long long top = variant == DetVariant::lower_clip ? i - std::max(0, j - h) + 1
                                                               : std::min(i + h, n + 1) - j + 1;
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = binomial(top, j - i + 1);
    }
  }
  return m;
}

BigInt count_atmost_det(int n, int h, DetVariant variant) { return det_exact(count_matrix(n, h, variant)); }

BigInt count_atmost_reflection(int n, int h) {
  const long long m = 2LL * n + 3;
  const long long step = h + 3;
  BigInt numerator = 0;
  for (long long k = -(m / step) - 1; k <= m / step + 1; ++k) {
    const BigInt b = binomial(m, n + 1 - k * step);
    if (!b.is_zero()) numerator += BigInt(2 * k * step + 1) * b;
  }
  if (numerator % m != 0)
    throw std::logic_error("reflection sum not divisible by 2n+3 at n=" + std::to_string(n) + ", h=" + std::to_string(h));
  return numerator / m;
}

UniPoly chebyshev_P(int m) {
  // U_m has only the powers y^{m-2j}; strip the 2^{m-2j} and read off the sign.
  const UniPoly u = chebyshev_U(m);
  std::vector<BigInt> p;
  for (int j = 0; 2 * j <= m; ++j) p.push_back(u.coeff(m - 2 * j) >> (m - 2 * j));
  return UniPoly(std::move(p));
}

TruncatedSeries series_chebyshev(int h, int order) {
  return TruncatedSeries(chebyshev_P(h + 1), order) / TruncatedSeries(chebyshev_P(h + 2), order);
}

TruncatedSeries series_contfrac(int h, int order) {
  const TruncatedSeries one = TruncatedSeries::one(order);
  const TruncatedSeries x = TruncatedSeries::x(order);
  TruncatedSeries d = one;
  for (int level = 0; level <= h; ++level) d = one - x / d;
  return one / d;
}

CorollaryCounts corollary_counts(int n) {
  const BigInt two_n = BigInt(1) << n;
  BigInt three_n = 1;
  for (int i = 0; i < n; ++i) three_n *= 3;
  return {two_n, fibonacci(2 * n), (three_n + 1) / 2};
}

int brute_force_cap() {
  if (const char* env = std::getenv("ADNIL_BRUTE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 12;
}

void require_feasible(int n, bool allow_large) {
  const int cap = brute_force_cap();
  if (n > cap && !allow_large)
    throw FeasibilityError("exhaustive enumeration at n=" + std::to_string(n) + " exceeds the cap n<=" +
                           std::to_string(cap) + " (raise ADNIL_BRUTE_CAP or pass --allow-large)");
}

std::map<int, BigInt> classify_bruteforce(int n, const BruteOptions& options) {
  require_feasible(n, options.allow_large);
  using Tally = std::vector<std::uint64_t>;
  const Tally tally = reduce_partitions(
      n, options.jobs, Tally(static_cast<std::size_t>(n + 1), 0),
      [](Tally& acc, const StaircasePartition& p) { ++acc[static_cast<std::size_t>(class_fast(p))]; },
      [](Tally& into, Tally&& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });
  std::map<int, BigInt> out;
  for (std::size_t k = 0; k < tally.size(); ++k)
    if (tally[k] != 0) out[static_cast<int>(k)] = tally[k];
  return out;
}

std::optional<CountMethod> parse_count_method(std::string_view name) {
  for (CountMethod m : {CountMethod::sum, CountMethod::det44, CountMethod::det45, CountMethod::reflection,
                        CountMethod::genfun, CountMethod::contfrac, CountMethod::brute})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

std::string_view method_name(CountMethod m) {
  switch (m) {
    case CountMethod::sum: return "sum";
    case CountMethod::det44: return "det44";
    case CountMethod::det45: return "det45";
    case CountMethod::reflection: return "reflection";
    case CountMethod::genfun: return "genfun";
    case CountMethod::contfrac: return "contfrac";
    case CountMethod::brute: return "brute";
  }
  return "?";
}

BigInt count_atmost(int n, int h, CountMethod method, const BruteOptions& options) {
  if (h < 0) return 0;
  switch (method) {
    case CountMethod::sum: return count_atmost_sum(n, h);
    case CountMethod::det44: return count_atmost_det(n, h, DetVariant::lower_clip);
    case CountMethod::det45: return count_atmost_det(n, h, DetVariant::upper_clip);
    case CountMethod::reflection: return count_atmost_reflection(n, h);
    case CountMethod::genfun: return series_chebyshev(h, n + 1)[n + 1];
    case CountMethod::contfrac: return series_contfrac(h, n + 1)[n + 1];
    case CountMethod::brute: {
      BigInt total = 0;
      for (const auto& [k, c] : classify_bruteforce(n, options))
        if (k <= h) total += c;
      return total;
    }
  }
  return 0;
}

BigInt count_exact(int n, int k, CountMethod method, const BruteOptions& options) {
  if (k < 0) return 0;
  if (method == CountMethod::sum) return count_exact_class(n, k);
  if (method == CountMethod::brute) {
    const auto tally = classify_bruteforce(n, options);
    auto it = tally.find(k);
    return it == tally.end() ? BigInt(0) : it->second;
  }
  return count_atmost(n, k, method, options) - count_atmost(n, k - 1, method, options);
}

}  // namespace adnil
