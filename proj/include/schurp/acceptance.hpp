#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schurp {

enum class VerifyLevel { Quick, Full };

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the verification suite, one pass/fail line per criterion on `out`.
// Quick covers the ten acceptance criteria; Full adds the extended property
// sweeps. Returns the per-criterion outcomes.
std::vector<CriterionResult> run_acceptance(VerifyLevel level, std::ostream& out);

bool run_acceptance_ok(VerifyLevel level, std::ostream& out);

}  // namespace schurp
