#include <cmath>

#include "rosenmorse/errors.hpp"
#include "rosenmorse/oracles.hpp"

namespace rosenmorse::oracles {

double raising_factor(double alpha, int n) {
  return std::sqrt((n + 1.0) * (2.0 * alpha - n) * (alpha - n) / (alpha - n - 1.0));
}

double ladder_numeric_check(const PotentialParams& p, int n, double x) {
  if (p.beta != 0.0) {
    throw SymmetricOnlyError("ladder_numeric_check: only defined for beta = 0");
  }
  const Eigenstate lower = build_state(p, n);
  const Eigenstate upper = build_state(p, n + 1);

  const StateDerivatives d = eval_derivatives(lower, x);
  const double raised = -std::cosh(x) * d.dpsi + (p.alpha - n) * std::sinh(x) * d.psi;
  return raised - raising_factor(p.alpha, n) * eval_state(upper, x);
}

}  // namespace rosenmorse::oracles
