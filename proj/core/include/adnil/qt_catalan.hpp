#pragma once

#include <adnil/bigint.hpp>
#include <adnil/enumeration.hpp>
#include <adnil/polynomial.hpp>
#include <adnil/staircase.hpp>

#include <vector>

namespace adnil {

// C_n(q,t) = sum over ideals of q^class t^dimension.

BiPoly qt_catalan_formula(int n);
BiPoly qt_catalan_bruteforce(int n, const BruteOptions& options = {});

// Extremal dimensions at fixed class k, and extremal classes at fixed
// dimension A. All throw std::invalid_argument out of range; k = 0 and A = 0
// both refer to the zero ideal alone.
BigInt theta_min(int n, int k);
BigInt theta_max(int n, int k);
int Theta_min(int n, long long A);
int Theta_max(int n, long long A);
/// max{k : theta_min(n,k) <= A} by plain search.
int Theta_max_search(int n, long long A);

/// Composition mu_0 + ... + mu_k = n + 1 with every part >= 1. It encodes the
/// partition whose outer corners all lie on the anti-diagonal x + y = n + 1.
struct CornerComposition {
  int rank = 0;
  std::vector<int> parts;
};

CornerComposition make_corner_composition(std::vector<int> parts, int rank);
StaircasePartition corner_partition(const CornerComposition& mu);
/// k+1 parts, the larger value floor((n+1)/(k+1)) + 1 first.
CornerComposition balanced_composition(int n, int k);

struct ExtremalWitness {
  StaircasePartition smallest;
  StaircasePartition largest;
};

/// Class-k ideals of dimension theta_min(n,k) and theta_max(n,k); 1 <= k <= n.
ExtremalWitness extremal_witness(int n, int k);

}  // namespace adnil
