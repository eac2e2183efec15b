#pragma once

#include <json.hpp>

#include "schurp/characters.hpp"
#include "schurp/polynomials.hpp"

namespace schurp {

using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings so nothing is ever rounded.
std::string json_rational(const Rational& value);
Rational rational_from_json_string(const std::string& text);

// {degree, n_vars, terms: [{partition, num, den}]}, terms in descending
// lexicographic partition order.
Json monomial_to_json(const MonomialPolynomial& poly);
MonomialPolynomial monomial_from_json(const Json& j);

// {k, rows: [{mu, rho, a, b}]}, rows ordered by (mu, rho).
Json character_table_to_json(const CharacterTable& table);

// CSV with header n,xi_a,xi_b,psi_a,psi_b,abs_error; everything exact except
// the decimal error column.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace schurp
