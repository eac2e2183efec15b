#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "schurp/error.hpp"
#include "schurp/partition.hpp"

using namespace schurp;

namespace {

StrictPartition sp(std::vector<int> parts) { return StrictPartition::normalized(std::move(parts)); }
Partition pp(std::vector<int> parts) { return Partition::normalized(std::move(parts)); }

}  // namespace

TEST_CASE("normalization sorts, drops zeros and rejects negatives") {
  CHECK(pp({3, 1, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(pp({}).weight() == 0);
  CHECK(pp({0, 2, 0}).parts() == std::vector<int>{2});
  CHECK_THROWS_AS(pp({2, -1}), Error);
  CHECK_THROWS_AS(sp({2, 2}), Error);
  CHECK(sp({}).empty());
  try {
    sp({2, 2});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotStrict);
  }
}

TEST_CASE("parsing round-trips the csv form") {
  Partition p = Partition::parse("6,5,3,1");
  CHECK(p.str() == "6,5,3,1");
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("").str() == "");
  CHECK_THROWS_AS(Partition::parse("2,x"), Error);
}

TEST_CASE("containment examples") {
  CHECK(contains(pp({2}), pp({3, 1})));
  CHECK_FALSE(contains(pp({2, 2}), pp({3, 1})));
  CHECK(contains(pp({}), pp({5, 2})));
  CHECK(contains(pp({}), pp({})));
}

TEST_CASE("containment is a partial order on small weights") {
  std::vector<Partition> all;
  for (int w = 0; w <= 6; ++w)
    for (auto& p : partitions_of(w)) all.push_back(p);
  for (const auto& p : all) CHECK(contains(p, p));
  for (const auto& p : all)
    for (const auto& q : all) {
      if (contains(p, q) && contains(q, p)) CHECK(p == q);
      if (!contains(p, q)) continue;
      for (const auto& s : all)
        if (contains(q, s)) CHECK(contains(p, s));
    }
}

TEST_CASE("one-box covers below") {
  auto covers = strict_covers_below(sp({3, 1}));
  REQUIRE(covers.size() == 2);
  CHECK(covers[0] == sp({2, 1}));
  CHECK(covers[1] == sp({3}));

  covers = strict_covers_below(sp({1}));
  REQUIRE(covers.size() == 1);
  CHECK(covers[0].empty());

  covers = strict_covers_below(sp({2, 1}));
  REQUIRE(covers.size() == 1);
  CHECK(covers[0] == sp({2}));
}

TEST_CASE("covers match removable boxes geometrically") {
  for (int w = 1; w <= 10; ++w)
    for (const auto& lambda : strict_partitions_of(w)) {
      ShiftedSkewShape shape(lambda, StrictPartition{});
      int removable = 0;
      for (const auto& cell : shape.cells())
        if (!shape.has_cell(cell.row, cell.col + 1) && !shape.has_cell(cell.row + 1, cell.col))
          ++removable;
      CHECK(removable == static_cast<int>(strict_covers_below(lambda).size()));
    }
}

TEST_CASE("shifted skew shapes") {
  ShiftedSkewShape shape = shifted_skew_shape(sp({3, 1}), sp({2}));
  CHECK(shape.cells() == std::vector<Cell>{{1, 3}, {2, 2}});

  CHECK(shifted_skew_shape(sp({2, 1}), sp({2, 1})).cells().empty());
  CHECK(shifted_skew_shape(sp({2}), StrictPartition{}).cells() ==
        std::vector<Cell>{{1, 1}, {1, 2}});
  CHECK_THROWS_AS(shifted_skew_shape(sp({2}), sp({3})), Error);
}

TEST_CASE("shape correspondence to ordinary diagrams") {
  auto [eta, nu] = remark17_to_ordinary(sp({3, 1}), sp({2}));
  CHECK(eta == pp({3, 2}));
  CHECK(nu == pp({2, 1}));

  auto [eta2, nu2] = remark17_to_ordinary(sp({2, 1}), sp({2, 1}));
  CHECK(eta2 == pp({2, 2}));
  CHECK(nu2 == pp({2, 2}));

  CHECK_THROWS_AS(remark17_to_ordinary(sp({3, 2, 1}), sp({1})), Error);
  try {
    remark17_to_ordinary(sp({3, 2, 1}), sp({1}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthCondition);
  }
}

TEST_CASE("correspondence preserves cell counts") {
  for (int w = 0; w <= 10; ++w)
    for (const auto& lambda : strict_partitions_of(w))
      for (int m = 0; m <= w; ++m)
        for (const auto& mu : strict_partitions_of(m)) {
          if (!contains(mu, lambda)) continue;
          int diff = lambda.length() - mu.length();
          if (diff != 0 && diff != 1) continue;
          auto [eta, nu] = remark17_to_ordinary(lambda, mu);
          CHECK(eta.weight() - nu.weight() == lambda.weight() - mu.weight());
          CHECK(contains(nu, eta));
        }
}

TEST_CASE("partition union merges multisets") {
  CHECK(partition_union(pp({3, 1}), pp({3})) == pp({3, 3, 1}));
  CHECK(partition_union(pp({4, 2}), pp({})) == pp({4, 2}));
  CHECK(partition_union(pp({2, 1}), pp({2, 1})) == pp({2, 2, 1, 1}));
}

TEST_CASE("odd partitions") {
  CHECK(is_odd_partition(pp({3, 1, 1})));
  CHECK_FALSE(is_odd_partition(pp({2, 1})));
  CHECK(is_odd_partition(pp({})));
}

TEST_CASE("enumeration counts match the classical tables") {
  // number of partitions of n
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  // number of strict partitions of n
  const int strict_counts[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
  for (int n = 0; n <= 10; ++n) {
    CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
    CHECK(strict_partitions_of(n).size() == static_cast<std::size_t>(strict_counts[n]));
  }
  // no duplicates
  auto ps = partitions_of(8);
  CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
}

TEST_CASE("multiplicity accessor") {
  Partition rho = pp({3, 3, 1});
  CHECK(rho.multiplicity(3) == 2);
  CHECK(rho.multiplicity(1) == 1);
  CHECK(rho.multiplicity(2) == 0);
}
