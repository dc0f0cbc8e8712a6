#include <algorithm>
#include <cmath>
#include <numbers>

#include "rosenmorse/errors.hpp"
#include "rosenmorse/oracles.hpp"

namespace rosenmorse::oracles {

QuadratureRule gauss_legendre(int points) {
  if (points < 1) throw DomainError("gauss_legendre: need at least one point");
  QuadratureRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  for (int i = 0; i < (points + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // P_points(x) and its derivative by the Legendre recurrence.
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  return rule;
}

double overlap(const Eigenstate& s1, const Eigenstate& s2) {
  if (s1.potential.alpha != s2.potential.alpha || s1.potential.beta != s2.potential.beta) {
    throw ParameterMismatchError("overlap: states belong to different potentials");
  }
  // psi_1 psi_2 decays at least like exp(-2 (b_min - |a|_max) |x|).
  const double b_min = std::min(s1.exponents.b, s2.exponents.b);
  const double a_max = std::max(std::abs(s1.exponents.a), std::abs(s2.exponents.a));
  const double rate = 2.0 * (b_min - a_max);
  const double L = std::max(10.0, std::log(1e12) / rate);

  static const QuadratureRule rule = gauss_legendre(20);
  constexpr double kPanelWidth = 0.25;
  const int panels = static_cast<int>(std::ceil(2.0 * L / kPanelWidth));
  const double width = 2.0 * L / panels;

  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double mid = -L + (k + 0.5) * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + 0.5 * width * rule.nodes[i];
      panel += rule.weights[i] * eval_state(s1, x) * eval_state(s2, x);
    }
    sum += 0.5 * width * panel;
  }
  return sum;
}

}  // namespace rosenmorse::oracles
