#pragma once

#include <map>
#include <vector>

#include "schurp/partition.hpp"
#include "schurp/rational.hpp"

namespace schurp {

// Coordinates x_1..x_n for evaluation; specializing at a partition uses its
// parts as coordinates.
using EvaluationPoint = std::vector<Rational>;

// Homogeneous symmetric polynomial in the monomial basis: sum of c_kappa
// m_kappa over partitions kappa of fixed weight with at most n_vars parts.
class MonomialPolynomial {
public:
  using TermMap = std::map<Partition, Rational, std::greater<Partition>>;

  MonomialPolynomial(int degree, int n_vars);

  void add_term(const Partition& key, const Rational& coeff);
  void add_scaled(const MonomialPolynomial& other, const Rational& factor);

  int degree() const { return degree_; }
  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Partition& key) const;
  bool is_zero() const { return terms_.empty(); }

  MonomialPolynomial scaled(const Rational& factor) const;

  // Exact value at a point with exactly n_vars coordinates.
  Rational evaluate(const EvaluationPoint& point) const;

  bool operator==(const MonomialPolynomial& other) const {
    return degree_ == other.degree_ && terms_ == other.terms_;
  }

private:
  int degree_;
  int n_vars_;
  TermMap terms_;
};

// Inhomogeneous symmetric polynomial as its homogeneous components, keyed by
// total degree. Zero components are not stored.
using GradedPolynomial = std::map<int, MonomialPolynomial>;

// Input polynomial r(x_1..x_l) for the symmetrization operator: exponent
// vector (length <= l, trailing zeros implied) -> coefficient.
using ExponentMap = std::map<std::vector<int>, Rational>;

// (x|k) = x(x-1)...(x-k+1); (x|0) = 1.
Rational falling_factorial(const Rational& x, int k);

// Product over parts t of rho of sum_i coords[i]^{rho_t}; empty rho gives 1.
Rational power_sum_eval(const Partition& rho, const EvaluationPoint& point);

// Schur P-polynomial value P_{mu|n}(point), computed as a sum over ordered
// injections of the mu-positions into coordinate indices. Returns 0 when
// l(mu) > n. Coordinates must be pairwise distinct.
Rational eval_P(const StrictPartition& mu, const EvaluationPoint& point);

// Factorial analogue P*_mu(lambda), evaluated at n = l(lambda) coordinates
// equal to the parts of lambda. Short-circuits to 0 when mu is not contained
// in lambda (the vanishing property).
Rational eval_Pstar(const StrictPartition& mu, const StrictPartition& lambda);

// Same value through the full injection sum, no containment shortcut.
Rational eval_Pstar_full_sum(const StrictPartition& mu, const StrictPartition& lambda);

// H(mu) = prod mu_t! * prod_{i<j} (mu_i+mu_j)/(mu_i-mu_j); equals P*_mu(mu).
Rational capital_h(const StrictPartition& mu);

// The symmetrization operator: sums r(x_{w(1)},..,x_{w(l)}) times the
// (x_i+x_j)/(x_i-x_j) cross factors over all permutations w of n variables.
// Computed through the antisymmetrized numerator divided exactly by the
// Vandermonde determinant, and returned in the monomial basis by degree.
// Supports n <= 7.
GradedPolynomial symmetrize_rtilde(const ExponentMap& r, int l, int n);

enum class PolynomialFamily { P, Pstar, PowerSum };

// Monomial-basis expansion of P_{index|n}, P*_{index|n} or p_{index|n}.
// P/Pstar require a strict index; the power-sum family requires all parts odd
// (the supersymmetric ones). P-family results are homogeneous; Pstar is
// generally not.
GradedPolynomial expand_in_monomials(PolynomialFamily family, const Partition& index, int n);

// Shifted Schur polynomial s*_nu as the ratio of the falling-factorial
// determinant det[((x_i+n-i)|(nu_j+n-j))] and the shifted Vandermonde
// prod_{i<j}((x_i-x_j)+(j-i)).
Rational eval_sstar(const Partition& nu, const EvaluationPoint& point);

// Randomized check that substituting (x_i,x_j) = (t,-t) makes the value
// independent of t; deterministic for a fixed seed.
bool supersymmetry_test(const MonomialPolynomial& poly, int trials, unsigned long seed);

// Drops monomials with more than m parts; views the polynomial in m variables
// (the x_{m+1} = ... = 0 specialization).
MonomialPolynomial truncate_vars(const MonomialPolynomial& poly, int m);
GradedPolynomial truncate_vars(const GradedPolynomial& poly, int m);

GradedPolynomial graded_scaled(const GradedPolynomial& poly, const Rational& factor);

}  // namespace schurp
