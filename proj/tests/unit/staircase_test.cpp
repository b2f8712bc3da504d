#include "../oracles.hpp"

#include <adnil/combinatorics.hpp>
#include <adnil/staircase.hpp>

#include <doctest.h>

using namespace adnil;

namespace {
StaircasePartition P(std::vector<int> parts, int n) { return make_partition(parts, n); }
std::vector<int> parts_of(const StaircasePartition& p) { return {p.parts().begin(), p.parts().end()}; }
}  // namespace

TEST_CASE("make_partition pads and validates") {
  CHECK(parts_of(P({3, 1}, 3)) == std::vector<int>{3, 1, 0});
  CHECK(parts_of(P({}, 5)) == std::vector<int>(5, 0));
  CHECK(parts_of(P({2, 1, 0, 0, 0}, 3)) == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(P({4, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(P({1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 2, 2}, 3), std::invalid_argument);  // third part above 1
  CHECK_THROWS_AS(P({1, 1, 1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(P({-1}, 3), std::invalid_argument);
}

TEST_CASE("parse_partition") {
  CHECK(parse_partition("10,10,9,6,5,4,4,3,1,1,1,1,0", 13).size() == 55);
  CHECK(parse_partition(" 3 , 1 ", 3) == P({3, 1}, 3));
  CHECK(parse_partition("0", 1).is_zero());
  CHECK(parse_partition("", 2).is_zero());
  CHECK_THROWS_AS(parse_partition("3,,1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3,x", 3), std::invalid_argument);
}

TEST_CASE("rank is part of the value") {
  CHECK(P({1}, 1) != P({1}, 2));
  CHECK_FALSE(P({1}, 2).contains(P({1}, 1)));
}

TEST_CASE("enumerate_all yields every staircase partition once, lexicographically") {
  std::vector<StaircasePartition> n1(enumerate_all(1).begin(), enumerate_all(1).end());
  REQUIRE(n1.size() == 2);
  CHECK(n1[0] == P({0}, 1));
  CHECK(n1[1] == P({1}, 1));

  for (int n = 1; n <= 8; ++n) {
    std::vector<std::vector<int>> listed;
    for (const StaircasePartition& p : enumerate_all(n)) {
      CHECK_NOTHROW(StaircasePartition::make(p.parts(), n));
      listed.push_back(parts_of(p));
    }
    CHECK(listed == oracle::all_partitions(n));
  }
  for (int n = 9; n <= 12; ++n) {
    long long count = 0;
    for (auto it = enumerate_all(n).begin(); it != std::default_sentinel; ++it) ++count;
    CHECK(BigInt(count) == catalan(n + 1));
  }
  CHECK(catalan(5) == 42);
  CHECK_THROWS_AS(enumerate_all(0), std::invalid_argument);
}

TEST_CASE("split ranges concatenate to the parent range") {
  for (int n = 1; n <= 8; ++n) {
    const PartitionRange all(n);
    std::vector<StaircasePartition> whole(all.begin(), all.end());
    for (int len = 0; len <= n + 1; ++len) {
      std::vector<StaircasePartition> joined;
      for (const PartitionRange& r : all.split(len)) joined.insert(joined.end(), r.begin(), r.end());
      CHECK(joined == whole);
    }
  }
  const PartitionRange sub(5, {3, 2});
  std::vector<StaircasePartition> pieces;
  for (const PartitionRange& r : sub.split(4)) pieces.insert(pieces.end(), r.begin(), r.end());
  CHECK(pieces == std::vector<StaircasePartition>(sub.begin(), sub.end()));
  CHECK_THROWS_AS(PartitionRange(3, {1, 2}), std::invalid_argument);
}

TEST_CASE("ideal_roots") {
  const auto cells = ideal_roots(P({3, 1}, 3));
  REQUIRE(cells.size() == 4);
  CHECK(cells[0] == RootCell::at(1, 1, 3));
  CHECK(cells[1] == RootCell::at(1, 2, 3));
  CHECK(cells[2] == RootCell::at(1, 3, 3));
  CHECK(cells[3] == RootCell::at(2, 1, 3));
  CHECK(cells[2].first == 1);
  CHECK(cells[2].last == 1);   // (1,3) is alpha_1
  CHECK(cells[0].last == 3);   // (1,1) is the highest root
  CHECK(ideal_roots(P({}, 3)).empty());
  CHECK(ideal_roots(StaircasePartition::full_staircase(3)).size() == 6);
}

TEST_CASE("ideal roots are closed under adding positive roots") {
  for (int n = 1; n <= 6; ++n) {
    for (const StaircasePartition& p : enumerate_all(n)) {
      const auto roots = oracle::roots_of(p);
      for (const auto& [a, b] : roots) {
        for (int c = 1; c <= n; ++c)
          for (int d = c; d <= n; ++d) {
            if (b + 1 == c) CHECK(roots.count({a, d}) == 1);
            if (d + 1 == a) CHECK(roots.count({c, b}) == 1);
          }
      }
    }
  }
}

TEST_CASE("corner cells") {
  auto corners = corner_cells(P({3, 1}, 3));
  REQUIRE(corners.size() == 2);
  CHECK(corners[0] == RootCell::at(1, 3, 3));
  CHECK(corners[1] == RootCell::at(2, 1, 3));
  CHECK(corner_cells(P({}, 4)).empty());
  corners = corner_cells(P({2, 2, 1}, 3));
  REQUIRE(corners.size() == 2);
  CHECK(corners[0] == RootCell::at(2, 2, 3));
  CHECK(corners[1] == RootCell::at(3, 1, 3));
}

TEST_CASE("corner cells regenerate the partition") {
  for (int n = 1; n <= 7; ++n) {
    for (const StaircasePartition& p : enumerate_all(n)) {
      std::vector<int> rebuilt(static_cast<std::size_t>(n), 0);
      for (const RootCell& c : corner_cells(p))
        for (int i = 1; i <= c.row; ++i) rebuilt[static_cast<std::size_t>(i - 1)] = std::max(rebuilt[static_cast<std::size_t>(i - 1)], c.col);
      CHECK(rebuilt == parts_of(p));
    }
  }
}

TEST_CASE("dimension") {
  CHECK(dimension(P({3, 1}, 3)) == 4);
  CHECK(dimension(P({}, 3)) == 0);
  CHECK(dimension(P({10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1, 0}, 13)) == 55);
}
