#include "schurp/root2.hpp"

#include <sstream>
#include <iomanip>

#include "schurp/error.hpp"

namespace schurp {

Root2Value operator/(const Root2Value& x, const Root2Value& y) {
  Rational norm = y.a * y.a - 2 * y.b * y.b;
  if (norm == 0) {
    if (y.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
    // a^2 = 2 b^2 with rational a, b forces a = b = 0
    fail(ErrorCode::InvalidArgument, "invalid Root2Value divisor");
  }
  Root2Value num = x * Root2Value{y.a, -y.b};
  return {num.a / norm, num.b / norm};
}

Root2Value pow2_half(long m) {
  if (m % 2 == 0) return Root2Value{pow2_rational(m / 2), Rational(0)};
  // for odd m of either sign, 2^(m/2) = 2^((m-1)/2) * sqrt(2); m-1 is even
  return Root2Value{Rational(0), pow2_rational((m - 1) / 2)};
}

mpf_class root2_numeric(const Root2Value& value, mp_bitcnt_t precision) {
  mpf_class sqrt2(2, precision);
  sqrt2 = sqrt(sqrt2);
  return mpf_class(value.a, precision) + mpf_class(value.b, precision) * sqrt2;
}

std::string decimal_str(const mpf_class& value, int digits) {
  std::ostringstream oss;
  oss << std::setprecision(digits) << value;
  return oss.str();
}

std::string root2_str(const Root2Value& value) {
  if (value.is_zero()) return "0";
  auto radical = [](const Rational& b) {
    if (b == 1) return std::string("sqrt2");
    if (b == -1) return std::string("-sqrt2");
    return "(" + rational_str(b) + ")*sqrt2";
  };
  if (value.b == 0) return rational_str(value.a);
  if (value.a == 0) return radical(value.b);
  if (value.b > 0) return rational_str(value.a) + " + " + radical(value.b);
  return rational_str(value.a) + " - " + radical(-value.b);
}

}  // namespace schurp
