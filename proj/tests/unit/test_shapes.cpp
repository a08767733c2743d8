#include <doctest.h>

#include <functional>
#include <set>

#include "support/gen.hpp"
#include "toda_rpp/errors.hpp"
#include "toda_rpp/shapes/rpp.hpp"

using namespace toda_rpp;

namespace {

Partition random_partition(testgen::Gen& g, int max_rows, int max_cols) {
  std::vector<int> parts;
  int cap = g.uniform(0, max_cols);
  const int rows = g.uniform(0, max_rows);
  for (int i = 0; i < rows && cap > 0; ++i) {
    cap = g.uniform(1, cap);
    parts.push_back(cap);
  }
  return Partition(parts);
}

// Counts fillings in [0, n]^cells that are monotone, by exhaustive product.
long long brute_force_count(const Partition& lambda, int n) {
  const auto cells = lambda.cells();
  std::vector<int> v(cells.size(), 0);
  long long count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t k = 0; k < cells.size() && ok; ++k) {
      for (std::size_t m = 0; m < cells.size(); ++m) {
        bool left = cells[m].i == cells[k].i && cells[m].j + 1 == cells[k].j;
        bool above = cells[m].j == cells[k].j && cells[m].i + 1 == cells[k].i;
        if ((left || above) && v[m] > v[k]) ok = false;
      }
    }
    count += ok;
    std::size_t k = 0;
    while (k < v.size() && v[k] == n) v[k++] = 0;
    if (k == v.size()) return count;
    ++v[k];
  }
}

const std::vector<std::vector<int>> kFig3 = {{0, 0, 1, 1, 2}, {0, 2, 3, 4}, {2, 4, 4, 4}, {2, 4}, {3}};

}  // namespace

TEST_CASE("partition parsing") {
  CHECK(Partition::parse("5,4,4,2,1").parts() == std::vector<int>{5, 4, 4, 2, 1});
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse(" 2 , 1 ").parts() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Partition::parse("1,2"), ShapeError);
  CHECK_THROWS_AS(Partition::parse("2,0"), ShapeError);
  CHECK_THROWS_AS(Partition::parse("2,,1"), ParseError);
  CHECK_THROWS_AS(Partition::parse("a"), ParseError);
  CHECK(Partition::parse("3,1").to_string() == "3,1");
}

TEST_CASE("conjugate") {
  CHECK(Partition({1}).conjugate() == Partition({1}));
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Partition({5, 4, 4, 2, 1}).conjugate() == Partition({5, 4, 3, 3, 1}));
  CHECK(Partition().conjugate() == Partition());
  testgen::Gen g(3);
  for (int trial = 0; trial < 100; ++trial) {
    Partition p = random_partition(g, 7, 7);
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().size() == p.size());
  }
}

TEST_CASE("extended accessors") {
  Partition p({2, 1});
  CHECK(p.part_ext(0) == 2);
  CHECK(p.conj_ext(-3) == 2);
  CHECK(p.part_ext(5) == 0);
  CHECK(p.conj_ext(3) == 0);
  testgen::Gen g(4);
  for (int trial = 0; trial < 50; ++trial) {
    Partition q = random_partition(g, 6, 6);
    for (int k = -5; k <= 0; ++k) {
      CHECK(q.conj_ext(k) == q.r());
      CHECK(q.part_ext(k) == q.c());
    }
  }
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_up_to(6).size() == 1 + 1 + 2 + 3 + 5 + 7 + 11);
}

TEST_CASE("rpp validation") {
  Partition fig3({5, 4, 4, 2, 1});
  RppTable t(fig3, 4, kFig3);
  CHECK(t.at(3, 2) == 4);
  CHECK(t.rows() == kFig3);
  CHECK(t.to_json().dump() == "[[0,0,1,1,2],[0,2,3,4],[2,4,4,4],[2,4],[3]]");
  CHECK_THROWS_AS(RppTable(fig3, 3, kFig3), DomainError);
  CHECK_THROWS_AS(RppTable(Partition({2}), 2, {{1, 0}}), DomainError);
  CHECK_THROWS_AS(RppTable(Partition({1, 1}), 2, {{1}, {0}}), DomainError);
  CHECK_THROWS_AS(RppTable(Partition({2}), 2, {{1}}), ShapeError);
}

TEST_CASE("trace and size") {
  RppTable empty = RppTable::zeros(Partition(), 3);
  for (int l = -3; l <= 3; ++l) CHECK(empty.trace(l) == 0);
  RppTable t(Partition({5, 4, 4, 2, 1}), 4, kFig3);
  CHECK(t.trace(0) == 6);
  int total = 0;
  for (int l = 1 - 5; l <= 5 - 1; ++l) total += t.trace(l);
  CHECK(total == t.size());
  CHECK(t.size() == 36);
}

TEST_CASE("rpp enumeration counts") {
  CHECK(count_rpp(Partition({1}), 1) == 2);
  CHECK(count_rpp(Partition({2, 1}), 1) == 5);
  CHECK(count_rpp(Partition({3, 3, 3}), 3) == 980);
  CHECK(count_rpp(Partition(), 3) == 1);
  CHECK(count_rpp(Partition({2, 2}), 2) == 20);
  auto tables = enumerate_rpp(Partition({1}), 1);
  REQUIRE(tables.size() == 2);
  CHECK(tables[0].rows() == std::vector<std::vector<int>>{{0}});
  CHECK(tables[1].rows() == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("enumeration matches exhaustive filtering") {
  for (const auto& lambda : partitions_up_to(5)) {
    for (int n = 0; n <= 2; ++n) CHECK(count_rpp(lambda, n) == brute_force_count(lambda, n));
  }
}

TEST_CASE("enumeration yields distinct valid tables") {
  testgen::Gen g(5);
  for (int trial = 0; trial < 20; ++trial) {
    Partition lambda = random_partition(g, 3, 3);
    const int n = g.uniform(0, 3);
    std::set<std::vector<std::vector<int>>> seen;
    for_each_rpp(lambda, n, [&](const RppTable& t) {
      CHECK(seen.insert(t.rows()).second);
      RppTable copy(lambda, n, t.rows());
      CHECK(copy == t);
    });
  }
}

TEST_CASE("enumeration count is monotone") {
  testgen::Gen g(6);
  for (int trial = 0; trial < 20; ++trial) {
    Partition lambda = random_partition(g, 3, 3);
    const int n = g.uniform(0, 2);
    CHECK(count_rpp(lambda, n) <= count_rpp(lambda, n + 1));
    std::vector<int> parts = lambda.parts();
    if (parts.empty()) {
      parts.push_back(1);
    } else {
      parts[0] += 1;
    }
    CHECK(count_rpp(lambda, n) <= count_rpp(Partition(parts), n));
  }
}
