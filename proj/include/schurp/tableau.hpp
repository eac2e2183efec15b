#pragma once

#include "schurp/partition.hpp"
#include "schurp/rational.hpp"

namespace schurp {

// Exact tableau counts; these grow superexponentially, so they live in
// arbitrary-precision integers.
using TableauCount = Integer;

// Number of fillings with 1..|cells|, strictly increasing along rows and down
// columns, counted by backtracking over linear extensions of the cell poset.
TableauCount count_shifted_standard_tableaux(const ShiftedSkewShape& shape);
TableauCount count_ordinary_standard_tableaux(const OrdinarySkewShape& shape);

// Same quantity through the defining recursion: g_{mu/mu} = 1, g_{lambda/mu}=0
// when mu is not contained in lambda, and otherwise the sum of g_{nu/mu} over
// strict nu obtained from lambda by removing one box. Memoized per query.
TableauCount count_shifted_recursive(const StrictPartition& lambda, const StrictPartition& mu);

}  // namespace schurp
