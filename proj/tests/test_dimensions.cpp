#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurp/dimensions.hpp"
#include "schurp/error.hpp"
#include "schurp/partition.hpp"
#include "schurp/polynomials.hpp"
#include "schurp/tableau.hpp"

using namespace schurp;

namespace {

StrictPartition sp(std::vector<int> parts) { return StrictPartition::normalized(std::move(parts)); }
Partition pp(std::vector<int> parts) { return Partition::normalized(std::move(parts)); }

}  // namespace

TEST_CASE("closed whole-diagram dimensions") {
  CHECK(g_closed(sp({3, 1})) == 2);
  CHECK(g_closed(sp({3, 2, 1})) == 2);
  CHECK(g_closed(StrictPartition{}) == 1);
  for (int k = 1; k <= 8; ++k) CHECK(g_closed(sp({k})) == 1);

  CHECK(f_closed(pp({2, 1})) == 2);
  CHECK(f_closed(pp({2, 2})) == 2);
  CHECK(f_closed(pp({})) == 1);
  for (int n = 1; n <= 8; ++n) CHECK(f_closed(pp({n})) == 1);
}

TEST_CASE("skew dimension formula examples") {
  CHECK(g_skew(sp({3, 1}), sp({2})).value == 2);
  CHECK(g_skew(sp({3, 1}), sp({3, 1})).value == 1);
  CHECK(g_skew(sp({4, 2}), sp({3})).value == 3);
  CHECK(g_skew(sp({4, 2}), sp({5})).value == 0);  // (5) not contained in (4,2)
}

TEST_CASE("skew dimension conventions") {
  // mu not contained in lambda gives 0 with no trace
  DimensionResult r = g_skew(sp({3}), sp({2, 1}));
  CHECK(r.value == 0);
  CHECK_FALSE(r.trace.has_value());
  // lambda/lambda has one labelling and a full trace
  DimensionResult d = g_skew(sp({2, 1}), sp({2, 1}));
  CHECK(d.value == 1);
  REQUIRE(d.trace.has_value());
  CHECK(d.trace->polynomial_value == capital_h(sp({2, 1})));
}

TEST_CASE("f-side skew examples") {
  CHECK(f_skew(pp({2, 1}), pp({1})).value == 2);
  CHECK(f_skew(pp({2, 2}), pp({2, 2})).value == 1);
  CHECK(f_skew(pp({3, 2}), pp({2, 1})).value == 2);
  CHECK(f_skew(pp({2}), pp({3})).value == 0);
}

TEST_CASE("g_skew matches backtracking up to weight 8") {
  for (int w = 0; w <= 8; ++w)
    for (const auto& lambda : strict_partitions_of(w))
      for (int m = 0; m <= w; ++m)
        for (const auto& mu : strict_partitions_of(m)) {
          if (!contains(mu, lambda)) continue;
          CHECK(g_skew(lambda, mu).value ==
                count_shifted_standard_tableaux(shifted_skew_shape(lambda, mu)));
        }
}

TEST_CASE("f_skew matches backtracking up to weight 8") {
  for (int w = 0; w <= 8; ++w)
    for (const auto& eta : partitions_of(w)) {
      CHECK(f_closed(eta) == f_skew(eta, Partition{}).value);
      for (int m = 0; m <= w; ++m)
        for (const auto& nu : partitions_of(m)) {
          if (!contains(nu, eta)) continue;
          CHECK(f_skew(eta, nu).value ==
                count_ordinary_standard_tableaux(OrdinarySkewShape(eta, nu)));
        }
    }
}

TEST_CASE("whole shapes through the skew formulas") {
  for (int w = 0; w <= 8; ++w)
    for (const auto& lambda : strict_partitions_of(w))
      CHECK(g_closed(lambda) == g_skew(lambda, StrictPartition{}).value);
}

TEST_CASE("shape correspondence identity") {
  CHECK(remark17_identity_check(sp({3, 1}), sp({2})));
  CHECK(remark17_identity_check(sp({2, 1}), sp({2, 1})));
  CHECK(remark17_identity_check(sp({4, 2}), sp({3, 1})));
  CHECK_THROWS_AS(remark17_identity_check(sp({3, 2, 1}), sp({1})), Error);
}

TEST_CASE("s*_nu(nu) through the dimension formula") {
  // f_{eta/eta} = 1 forces s*_nu(nu) = (|nu| falling |nu|) / 1 ... checked via f_skew
  Partition nu = pp({2, 2});
  EvaluationPoint point;
  for (int part : nu.parts()) point.emplace_back(part);
  Rational direct = eval_sstar(nu, point);
  // f_skew(nu, nu) = f_nu * s*_nu(nu) / (|nu| | |nu|) must equal 1
  Rational expected = falling_factorial(Rational(nu.weight()), static_cast<int>(nu.weight())) /
                      Rational(f_closed(nu));
  CHECK(direct == expected);
  CHECK(f_skew(nu, nu).value == 1);
}
