#pragma once

#include <map>
#include <vector>

#include "schurp/partition.hpp"
#include "schurp/polynomials.hpp"
#include "schurp/rational.hpp"
#include "schurp/root2.hpp"

namespace schurp {

// Conjugacy-class label t_rho inside the double cover of S(n): only the cycle
// type is modeled, never the group element.
struct ClassLabel {
  Partition rho;
  int n = 0;

  ClassLabel(Partition rho_, int n_);
};

// Thoma-type parameter: weakly decreasing non-negative rationals with sum <= 1.
struct ThomaPoint {
  std::vector<Rational> gamma;

  explicit ThomaPoint(std::vector<Rational> gamma_);
};

// Full table of character values for one weight k: (strict mu of k, odd rho
// of k) -> value of the sign-symmetrized irreducible spin character at t_rho.
class CharacterTable {
public:
  static CharacterTable build(int k);

  // Shared, immutable, built once per k.
  static const CharacterTable& for_weight(int k);

  int k() const { return k_; }
  const Root2Value& value(const StrictPartition& mu, const Partition& rho) const;
  const std::map<std::pair<StrictPartition, Partition>, Root2Value>& entries() const {
    return entries_;
  }

private:
  int k_ = 0;
  std::map<std::pair<StrictPartition, Partition>, Root2Value> entries_;
};

// Coefficients c_mu of p_rho = sum c_mu P_mu over strict partitions of |rho|,
// found by expanding both sides in the monomial basis and eliminating along
// the triangular leading terms of the P family. Requires all parts of rho odd
// and |rho| <= 9.
std::map<StrictPartition, Rational> p_to_P_coefficients(const Partition& rho);

// Character value at t_rho, extracted from the p-to-P transition as
// 2^((l(rho)-l(mu))/2) * c_mu. Requires |mu| = |rho| and rho all odd.
Root2Value char_value(const StrictPartition& mu, const Partition& rho);

// <Res restriction of the normalized character, chi^mu> =
// 2^((l(mu)-|mu|)/2) * P*_mu(lambda) / (|lambda| | |mu|).
Root2Value restriction_coefficient(const StrictPartition& lambda, const StrictPartition& mu);

// Normalized irreducible character of the big group at the embedded class:
// sum over strict mu of |rho| of restriction_coefficient * char_value.
Root2Value xi(const StrictPartition& lambda, const Partition& rho);

// Limit character: prod_{i>=2} p_i(gamma)^{m_i(rho)} * 2^((l(rho)-|rho|)/2)
// on odd rho, zero when rho has an even part.
Root2Value psi(const ThomaPoint& gamma, const Partition& rho);

// Deterministic realization of a strict partition sequence with
// lambda_i(n)/n -> gamma_i: floors, collision decrements, staircase remainder.
StrictPartition build_lambda_sequence(const ThomaPoint& gamma, int n);

struct ConvergenceRow {
  int n = 0;
  StrictPartition lambda;
  Root2Value xi_value;
  Root2Value psi_value;
  mpf_class abs_error;
};

std::vector<ConvergenceRow> convergence_table(const ThomaPoint& gamma, const Partition& rho,
                                              const std::vector<int>& ns);

// psi(rho union sigma) == psi(rho) * psi(sigma), exactly.
bool multiplicativity_check(const ThomaPoint& gamma, const Partition& rho,
                            const Partition& sigma);

// Restriction consistency: the character of lambda at rho union (1^{|lambda|-k})
// equals the g_{lambda/mu}-weighted sum of the characters of strict mu of k.
bool branching_check(const StrictPartition& lambda, int k, const Partition& rho);

}  // namespace schurp
