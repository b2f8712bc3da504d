#include <adnil/combinatorics.hpp>
#include <adnil/dyck.hpp>
#include <adnil/enumeration.hpp>
#include <adnil/nilpotence.hpp>
#include <adnil/qt_catalan.hpp>

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace adnil;

namespace {

// Every composition of `total` into `parts` positive parts.
std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int slots) -> void {
    if (slots == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int v = 1; v <= left - slots + 1; ++v) {
      cur.push_back(v);
      self(self, left - v, slots - 1);
      cur.pop_back();
    }
  };
  if (parts >= 1 && total >= parts) rec(rec, total, parts);
  return out;
}

}  // namespace

TEST_CASE("(q,t)-Catalan formula, small ranks") {
  CHECK(qt_catalan_formula(1).to_string() == "1 + qt");
  CHECK(qt_catalan_formula(2).to_string() == "1 + qt + 2qt^2 + q^2t^3");
  CHECK(qt_catalan_formula(4).at_one() == 42);
  const BiPoly c3 = qt_catalan_formula(3);
  const std::map<std::pair<int, int>, int> want{{{0, 0}, 1}, {{1, 1}, 1}, {{1, 2}, 2}, {{1, 3}, 3},
                                                {{1, 4}, 1}, {{2, 4}, 2}, {{2, 5}, 3}, {{3, 6}, 1}};
  REQUIRE(c3.terms().size() == want.size());
  for (const auto& [key, c] : want) CHECK(c3.coeff(key.first, key.second) == c);
}

TEST_CASE("(q,t)-Catalan formula equals the tally") {
  CHECK(qt_catalan_bruteforce(1).to_string() == "1 + qt");
  CHECK(qt_catalan_bruteforce(2).to_string() == "1 + qt + 2qt^2 + q^2t^3");
  CHECK(qt_catalan_bruteforce(3).at_one() == 14);
  for (int n = 1; n <= 9; ++n) CHECK(qt_catalan_formula(n) == qt_catalan_bruteforce(n));
}

TEST_CASE("specializations") {
  for (int n = 1; n <= 15; ++n) {
    const BiPoly c = qt_catalan_formula(n);
    CHECK(c.at_one() == catalan(n + 1));
    const UniPoly by_class = c.at_t_one();
    for (int k = 0; k <= n; ++k) CHECK(by_class.coeff(k) == count_exact_class(n, k));
  }
  for (int n = 1; n <= 8; ++n) {
    const int sq = (n + 1) * (n + 1);
    std::vector<BigInt> by_area(static_cast<std::size_t>(sq / 2 + 1));
    for (const DyckPath& d : enumerate_dyck_paths(n + 1)) by_area[static_cast<std::size_t>((sq - twice_area(d)) / 2)] += 1;
    CHECK(UniPoly(by_area) == qt_catalan_formula(n).at_q_one());
  }
}

TEST_CASE("extremal dimensions at fixed class") {
  for (int n = 1; n <= 15; ++n) CHECK(theta_min(n, 1) == 1);
  CHECK(theta_min(13, 3) == 26);
  CHECK(theta_min(3, 3) == 6);
  CHECK(theta_max(9, 3) == 37);
  CHECK(theta_max(3, 1) == 4);
  CHECK(theta_max(13, 3) == 73);
  for (int n = 1; n <= 12; ++n) CHECK(theta_max(n, n) == n * (n + 1) / 2);
  CHECK(theta_min(5, 0) == 0);
  CHECK(theta_max(5, 0) == 0);
  CHECK_THROWS_AS(theta_min(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(theta_max(3, -1), std::invalid_argument);
}

TEST_CASE("extremal classes at fixed dimension") {
  CHECK(Theta_min(3, 3) == 1);
  CHECK(Theta_min(3, 0) == 0);
  CHECK(Theta_min(3, 6) == 3);
  CHECK(Theta_max(3, 3) == 1);
  CHECK(Theta_max(3, 6) == 3);
  CHECK(Theta_max(13, 26) == 3);
  CHECK(Theta_min(3, 4) == 1);
  CHECK(Theta_max(3, 4) == 2);
  CHECK(Theta_min(3, 5) == 2);
  CHECK(Theta_max(3, 5) == 2);
  CHECK_THROWS_AS(Theta_min(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(Theta_max(3, -1), std::invalid_argument);
  // Closed form and search agree well past the brute-force range.
  for (int n = 1; n <= 60; ++n)
    for (long long A = 0; A <= n * (n + 1) / 2; ++A) CHECK(Theta_max(n, A) == Theta_max_search(n, A));
}

TEST_CASE("extremal values match brute force") {
  for (int n = 1; n <= 9; ++n) {
    const int dims = n * (n + 1) / 2;
    std::vector<int> lo_dim(static_cast<std::size_t>(n + 1), 1 << 20), hi_dim(static_cast<std::size_t>(n + 1), -1);
    std::vector<int> lo_cls(static_cast<std::size_t>(dims + 1), 1 << 20), hi_cls(static_cast<std::size_t>(dims + 1), -1);
    for (const StaircasePartition& p : enumerate_all(n)) {
      const auto k = static_cast<std::size_t>(class_tableau(p));
      const auto d = static_cast<std::size_t>(p.size());
      lo_dim[k] = std::min(lo_dim[k], p.size());
      hi_dim[k] = std::max(hi_dim[k], p.size());
      lo_cls[d] = std::min(lo_cls[d], static_cast<int>(k));
      hi_cls[d] = std::max(hi_cls[d], static_cast<int>(k));
    }
    for (int k = 0; k <= n; ++k) {
      CHECK(theta_min(n, k) == lo_dim[static_cast<std::size_t>(k)]);
      CHECK(theta_max(n, k) == hi_dim[static_cast<std::size_t>(k)]);
    }
    for (int A = 0; A <= dims; ++A) {
      CHECK(Theta_min(n, A) == lo_cls[static_cast<std::size_t>(A)]);
      CHECK(Theta_max(n, A) == hi_cls[static_cast<std::size_t>(A)]);
    }
  }
}

TEST_CASE("witnesses") {
  ExtremalWitness w = extremal_witness(3, 3);
  CHECK(w.smallest == StaircasePartition::full_staircase(3));
  CHECK(w.largest == StaircasePartition::full_staircase(3));
  w = extremal_witness(9, 3);
  CHECK(w.largest.size() == 37);
  CHECK(class_fast(w.largest) == 3);
  CHECK(balanced_composition(9, 3).parts == std::vector<int>{3, 3, 2, 2});
  w = extremal_witness(13, 3);
  CHECK(w.smallest.size() == 26);
  CHECK(class_fast(w.smallest) == 3);
  for (int n = 1; n <= 14; ++n)
    for (int k = 1; k <= n; ++k) {
      const ExtremalWitness x = extremal_witness(n, k);
      CHECK(class_tableau(x.smallest) == k);
      CHECK(class_tableau(x.largest) == k);
      CHECK(BigInt(x.smallest.size()) == theta_min(n, k));
      CHECK(BigInt(x.largest.size()) == theta_max(n, k));
    }
  CHECK_THROWS_AS(extremal_witness(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(extremal_witness(3, 4), std::invalid_argument);
}

TEST_CASE("corner compositions") {
  CHECK(corner_partition(make_corner_composition({2, 2}, 3)) == make_partition(std::vector<int>{2, 2, 0}, 3));
  CHECK_THROWS_AS(make_corner_composition({2, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_corner_composition({4, 0}, 3), std::invalid_argument);

  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= n; ++k) {
      int best = -1;
      std::vector<std::vector<int>> best_parts;
      for (const auto& parts : compositions(n + 1, k + 1)) {
        const StaircasePartition p = corner_partition(make_corner_composition(parts, n));
        CHECK(class_fast(p) == k);
        int removed = 0;
        for (int m : parts) removed += m * (m - 1) / 2;
        CHECK(p.size() == n * (n + 1) / 2 - removed);
        // Any rearrangement of the parts gives the same size.
        std::vector<int> rev(parts.rbegin(), parts.rend());
        CHECK(corner_partition(make_corner_composition(rev, n)).size() == p.size());
        if (p.size() > best) {
          best = p.size();
          best_parts.clear();
        }
        if (p.size() == best) best_parts.push_back(parts);
      }
      CHECK(BigInt(best) == theta_max(n, k));
      for (const auto& parts : best_parts) {
        const auto [lo, hi] = std::minmax_element(parts.begin(), parts.end());
        CHECK(*hi - *lo <= 1);
      }
    }
  }
}

TEST_CASE("t-degree support at each class is an interval") {
  for (int n = 1; n <= 9; ++n) {
    const BiPoly c = qt_catalan_formula(n);
    for (int k = 0; k <= n; ++k) {
      const UniPoly row = c.q_coefficient(k);
      CHECK(BigInt(row.degree()) == theta_max(n, k));
      for (int d = 0; d <= row.degree(); ++d) CHECK((row.coeff(d) != 0) == (BigInt(d) >= theta_min(n, k)));
    }
  }
}
