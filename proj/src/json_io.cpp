#include "schurp/json_io.hpp"

#include <sstream>

#include "schurp/error.hpp"

namespace schurp {

std::string json_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_from_json_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    fail(ErrorCode::InvalidArgument, "expected num/den rational: '" + text + "'");
  return parse_rational(text);
}

Json monomial_to_json(const MonomialPolynomial& poly) {
  Json j;
  j["degree"] = poly.degree();
  j["n_vars"] = poly.n_vars();
  Json terms = Json::array();
  for (const auto& [kappa, coeff] : poly.terms()) {
    Json term;
    term["partition"] = kappa.str();
    term["num"] = coeff.get_num().get_str();
    term["den"] = coeff.get_den().get_str();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

MonomialPolynomial monomial_from_json(const Json& j) {
  MonomialPolynomial poly(j.at("degree").get<int>(), j.at("n_vars").get<int>());
  for (const auto& term : j.at("terms")) {
    Partition kappa = Partition::parse(term.at("partition").get<std::string>());
    Rational coeff = parse_rational(term.at("num").get<std::string>() + "/" +
                                    term.at("den").get<std::string>());
    poly.add_term(kappa, coeff);
  }
  return poly;
}

Json character_table_to_json(const CharacterTable& table) {
  Json j;
  j["k"] = table.k();
  Json rows = Json::array();
  for (const auto& [key, value] : table.entries()) {
    Json row;
    row["mu"] = key.first.str();
    row["rho"] = key.second.str();
    row["a"] = json_rational(value.a);
    row["b"] = json_rational(value.b);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "n,xi_a,xi_b,psi_a,psi_b,abs_error\n";
  for (const auto& row : rows) {
    out << row.n << ',' << rational_str(row.xi_value.a) << ',' << rational_str(row.xi_value.b)
        << ',' << rational_str(row.psi_value.a) << ',' << rational_str(row.psi_value.b) << ','
        << decimal_str(row.abs_error) << '\n';
  }
  return out.str();
}

}  // namespace schurp
