#include "schurp/rational.hpp"

#include "schurp/error.hpp"

namespace schurp {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty())
    fail(ErrorCode::InvalidArgument, "empty string is not a rational");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    fail(ErrorCode::InvalidArgument, "cannot parse rational '" + s + "'");
  if (q.get_den() == 0)
    fail(ErrorCode::InvalidArgument, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& value) {
  return value.get_str();
}

Rational pow2_rational(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  Rational r(1, p);
  r.canonicalize();
  return r;
}

}  // namespace schurp
