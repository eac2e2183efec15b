#pragma once

#include <string>

#include "schurp/rational.hpp"

namespace schurp {

// Exact scalar a + b*sqrt(2) with rational a, b; the ring where spin character
// values and restriction coefficients live. Equality is componentwise.
struct Root2Value {
  Rational a{0};
  Rational b{0};

  Root2Value() = default;
  Root2Value(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit Root2Value(const Rational& rational) : a(rational) {}

  bool is_zero() const { return a == 0 && b == 0; }

  bool operator==(const Root2Value&) const = default;

  Root2Value operator-() const { return {-a, -b}; }
  Root2Value& operator+=(const Root2Value& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Root2Value& operator-=(const Root2Value& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }

  friend Root2Value operator+(Root2Value lhs, const Root2Value& rhs) { return lhs += rhs; }
  friend Root2Value operator-(Root2Value lhs, const Root2Value& rhs) { return lhs -= rhs; }

  friend Root2Value operator*(const Root2Value& x, const Root2Value& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend Root2Value operator*(const Root2Value& x, const Rational& c) { return {x.a * c, x.b * c}; }
  friend Root2Value operator*(const Rational& c, const Root2Value& x) { return x * c; }

  // Division by conjugation; the denominator a^2 - 2 b^2 vanishes only at 0.
  friend Root2Value operator/(const Root2Value& x, const Root2Value& y);
};

// 2^(m/2) as a Root2Value: even m lands in the rational part, odd m
// contributes 2^((m-1)/2) * sqrt(2). Works for negative m.
Root2Value pow2_half(long m);

// Decimal value a + b*sqrt(2) at the given binary precision (>= 30 decimal
// digits at the default).
mpf_class root2_numeric(const Root2Value& value, mp_bitcnt_t precision = 256);

// Decimal string with the requested number of significant digits.
std::string decimal_str(const mpf_class& value, int digits = 36);

// Compact exact form: "0", "3/2", "(1/2)*sqrt2", "1 + 2*sqrt2", "1 - 2*sqrt2".
std::string root2_str(const Root2Value& value);

}  // namespace schurp
