#pragma once

#include <string>
#include <vector>

#include "rosenmorse/spectrum.hpp"

namespace rosenmorse::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  double orthonormality_tol = 1e-7;
};

// Runs every closed-form-vs-oracle check that applies to p. Results are
// sorted by name regardless of the order in which the checks finish.
std::vector<CheckResult> run_verification(const PotentialParams& p, const VerifyOptions& opts);

}  // namespace rosenmorse::cli
