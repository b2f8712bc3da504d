#pragma once

#include <adnil/bigint.hpp>
#include <adnil/determinant.hpp>
#include <adnil/series.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace adnil {

// Counts of ideals by class of nilpotence, several independent ways.
// alpha_n(k): class exactly k. alpha_n(<= h): class at most h.

BigInt count_exact_class(int n, int k);

/// Sum over weakly increasing 0 = i_0 <= i_1 <= ... <= i_h <= i_{h+1} = n+1.
BigInt count_atmost_sum(int n, int h);

/// The same sum restricted to index sequences that are strictly increasing
/// once past the leading zeros. Agrees with count_atmost_sum; kept for checks.
BigInt count_atmost_sum_filtered(int n, int h);

enum class DetVariant {
  lower_clip,  // entries binomial(i - max(0, j-h) + 1, j - i + 1)
  upper_clip,  // entries binomial(min(i+h, n+1) - j + 1, j - i + 1)
};

BigMatrix count_matrix(int n, int h, DetVariant variant);
BigInt count_atmost_det(int n, int h, DetVariant variant);

/// Reflection-principle sum over k of (2k(h+3)+1)/(2n+3) * binomial(2n+3, n+1-k(h+3)).
/// Throws std::logic_error if the accumulated numerator is not divisible.
BigInt count_atmost_reflection(int n, int h);

/// P_{h+1}(x) / P_{h+2}(x) through x^order, with
/// P_m(x) = sum_j (-1)^j binomial(m-j, j) x^j taken from U_m.
TruncatedSeries series_chebyshev(int h, int order);
UniPoly chebyshev_P(int m);

/// 1/(1 - x/(1 - x/(... /(1 - x)))) with h+1 copies of x.
TruncatedSeries series_contfrac(int h, int order);

struct CorollaryCounts {
  BigInt abelian;   // 2^n
  BigInt atmost2;   // F_{2n}
  BigInt atmost3;   // (3^n + 1) / 2
};

CorollaryCounts corollary_counts(int n);

class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest n for exhaustive enumeration without an override. Reads
/// ADNIL_BRUTE_CAP if set to a positive integer, else 12.
int brute_force_cap();

/// Throws FeasibilityError when n exceeds the cap and allow_large is false.
void require_feasible(int n, bool allow_large);

struct BruteOptions {
  int jobs = 0;  // 0: default_jobs()
  bool allow_large = false;
};

/// class -> number of ideals, over every partition at rank n.
std::map<int, BigInt> classify_bruteforce(int n, const BruteOptions& options = {});

enum class CountMethod { sum, det44, det45, reflection, genfun, contfrac, brute };

std::optional<CountMethod> parse_count_method(std::string_view name);
std::string_view method_name(CountMethod m);

BigInt count_atmost(int n, int h, CountMethod method, const BruteOptions& options = {});
/// Direct for `sum` and `brute`, by differencing at-most counts otherwise.
BigInt count_exact(int n, int k, CountMethod method, const BruteOptions& options = {});

}  // namespace adnil
