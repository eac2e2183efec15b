#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "schurp/json_io.hpp"
#include "schurp/partition.hpp"
#include "schurp/polynomials.hpp"

using namespace schurp;

namespace {

Partition pp(std::vector<int> parts) { return Partition::normalized(std::move(parts)); }

}  // namespace

TEST_CASE("rational json form") {
  Rational q(-3, 6);
  q.canonicalize();
  CHECK(json_rational(q) == "-1/2");
  CHECK(rational_from_json_string("-1/2") == q);
  CHECK(json_rational(Rational(0)) == "0/1");
}

TEST_CASE("monomial polynomial serialization round-trips byte-identically") {
  GradedPolynomial graded = expand_in_monomials(PolynomialFamily::P, pp({3}), 3);
  const MonomialPolynomial& poly = graded.at(3);
  Json j = monomial_to_json(poly);
  std::string first = j.dump(2);
  Json reparsed = Json::parse(first);
  CHECK(reparsed.dump(2) == first);
  MonomialPolynomial back = monomial_from_json(reparsed);
  CHECK(back == poly);
  CHECK(back.n_vars() == poly.n_vars());
}

TEST_CASE("terms appear in descending lexicographic order") {
  GradedPolynomial graded = expand_in_monomials(PolynomialFamily::P, pp({3}), 3);
  Json j = monomial_to_json(graded.at(3));
  const auto& terms = j.at("terms");
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].at("partition") == "3");
  CHECK(terms[1].at("partition") == "2,1");
  CHECK(terms[2].at("partition") == "1,1,1");
}

TEST_CASE("character table serialization") {
  Json j = character_table_to_json(CharacterTable::for_weight(3));
  CHECK(j.at("k") == 3);
  // strict partitions of 3: (3), (2,1); odd classes: (3), (1,1,1)
  CHECK(j.at("rows").size() == 4);
  std::string first = j.dump(2);
  CHECK(Json::parse(first).dump(2) == first);
  bool found = false;
  for (const auto& row : j.at("rows"))
    if (row.at("mu") == "2,1" && row.at("rho") == "3") {
      CHECK(row.at("a") == "0/1");
      CHECK(row.at("b") == "-1/1");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("convergence csv shape") {
  ThomaPoint gamma({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  auto rows = convergence_table(gamma, pp({3}), {12, 24});
  std::string csv = convergence_csv(rows);
  CHECK(csv.rfind("n,xi_a,xi_b,psi_a,psi_b,abs_error\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("1/12") != std::string::npos);
}
