#pragma once

#include <optional>

#include "schurp/partition.hpp"
#include "schurp/rational.hpp"

namespace schurp {

// Exact dimension together with the factors of the closed-form ratio that
// produced it, when a formula path (rather than a convention shortcut) ran.
struct DimensionResult {
  struct Trace {
    Integer whole_dimension;       // g_lambda or f_eta
    Rational polynomial_value;     // P*_mu(lambda) or s*_nu(eta)
    Rational falling_factorial;    // (|outer| | |inner|)
  };

  Integer value{0};
  std::optional<Trace> trace;
};

// g_lambda = |lambda|! / prod(lambda_i!) * prod_{i<j}(lambda_i-lambda_j)/(lambda_i+lambda_j).
Integer g_closed(const StrictPartition& lambda);

// f_eta = |eta|! / prod((eta_i + l - i)!) * prod_{i<j}(eta_i - eta_j + j - i).
Integer f_closed(const Partition& eta);

// g_{lambda/mu} = g_lambda * P*_mu(lambda) / (|lambda| | |mu|); 0 when mu is
// not contained in lambda. Every division is exact and checked.
DimensionResult g_skew(const StrictPartition& lambda, const StrictPartition& mu);

// f_{eta/nu} = f_eta * s*_nu(eta) / (|eta| | |nu|); 0 when nu is not contained.
DimensionResult f_skew(const Partition& eta, const Partition& nu);

// All four routes of the shape-correspondence identity agree exactly:
// the P*-ratio, the shifted tableau count, the ordinary tableau count of the
// corresponding shape, and the s*-ratio.
bool remark17_identity_check(const StrictPartition& lambda, const StrictPartition& mu);

}  // namespace schurp
