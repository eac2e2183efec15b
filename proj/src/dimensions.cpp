#include "schurp/dimensions.hpp"

#include "schurp/error.hpp"
#include "schurp/polynomials.hpp"
#include "schurp/tableau.hpp"

namespace schurp {

namespace {

Integer to_exact_integer(const Rational& value, const char* what) {
  if (value.get_den() != 1) fail(ErrorCode::NonIntegerResult, what);
  return value.get_num();
}

Rational integer_factorial(long n) {
  Rational out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

Integer g_closed(const StrictPartition& lambda) {
  const auto& parts = lambda.parts();
  Rational value = integer_factorial(lambda.weight());
  for (int p : parts) value /= integer_factorial(p);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      value *= parts[i] - parts[j];
      value /= parts[i] + parts[j];
    }
  return to_exact_integer(value, "g_lambda formula produced a non-integer");
}

Integer f_closed(const Partition& eta) {
  const int l = eta.length();
  Rational value = integer_factorial(eta.weight());
  for (int i = 1; i <= l; ++i) value /= integer_factorial(eta.part(i) + l - i);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) value *= eta.part(i) - eta.part(j) + j - i;
  return to_exact_integer(value, "f_eta formula produced a non-integer");
}

DimensionResult g_skew(const StrictPartition& lambda, const StrictPartition& mu) {
  if (!contains(mu, lambda)) return {};  // g_{lambda/mu} = 0 by convention
  DimensionResult result;
  DimensionResult::Trace trace;
  trace.whole_dimension = g_closed(lambda);
  trace.polynomial_value = eval_Pstar(mu, lambda);
  trace.falling_factorial = falling_factorial(Rational(lambda.weight()),
                                              static_cast<int>(mu.weight()));
  Rational value = trace.whole_dimension * trace.polynomial_value / trace.falling_factorial;
  result.value = to_exact_integer(value, "g_{lambda/mu} formula produced a non-integer");
  result.trace = std::move(trace);
  return result;
}

DimensionResult f_skew(const Partition& eta, const Partition& nu) {
  if (!contains(nu, eta)) return {};
  DimensionResult result;
  DimensionResult::Trace trace;
  trace.whole_dimension = f_closed(eta);
  EvaluationPoint point;
  point.reserve(static_cast<std::size_t>(eta.length()));
  for (int part : eta.parts()) point.emplace_back(part);
  trace.polynomial_value = eval_sstar(nu, point);
  trace.falling_factorial = falling_factorial(Rational(eta.weight()),
                                              static_cast<int>(nu.weight()));
  Rational value = trace.whole_dimension * trace.polynomial_value / trace.falling_factorial;
  result.value = to_exact_integer(value, "f_{eta/nu} formula produced a non-integer");
  result.trace = std::move(trace);
  return result;
}

bool remark17_identity_check(const StrictPartition& lambda, const StrictPartition& mu) {
  auto [eta, nu] = remark17_to_ordinary(lambda, mu);  // validates the length condition
  Integer from_pstar = g_skew(lambda, mu).value;
  Integer shifted_count = count_shifted_standard_tableaux(shifted_skew_shape(lambda, mu));
  Integer ordinary_count = count_ordinary_standard_tableaux(OrdinarySkewShape(eta, nu));
  Integer from_sstar = f_skew(eta, nu).value;
  return from_pstar == shifted_count && shifted_count == ordinary_count &&
         ordinary_count == from_sstar;
}

}  // namespace schurp
