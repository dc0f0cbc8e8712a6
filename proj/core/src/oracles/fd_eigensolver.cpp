#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rosenmorse/errors.hpp"
#include "rosenmorse/oracles.hpp"

namespace rosenmorse::oracles {

namespace {

// Number of eigenvalues strictly below lambda (Sturm sequence of the LDL^T
// pivots).
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double lambda) {
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double e2 = (i == 0) ? 0.0 : off[i - 1] * off[i - 1];
    q = diag[i] - lambda - ((i == 0) ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues_below(const std::vector<double>& diag,
                                                  const std::vector<double>& off, double upper) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (off.size() + 1 != n) {
    throw DomainError("tridiagonal_eigenvalues_below: off-diagonal must have n - 1 entries");
  }

  // Gershgorin lower bound
  double lower = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < n) radius += std::abs(off[i]);
    lower = std::min(lower, diag[i] - radius);
  }
  lower -= 1.0;

  const int k = sturm_count(diag, off, upper);
  std::vector<double> values;
  values.reserve(k);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int j = 0; j < k; ++j) {
    double lo = values.empty() ? lower : values.back();
    double hi = upper;
    // Invariant: count(lo) <= j < count(hi).
    if (sturm_count(diag, off, lo) > j) lo = lower;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo <= 4.0 * eps * std::max(std::abs(lo), std::abs(hi)) || mid == lo || mid == hi) {
        break;
      }
      if (sturm_count(diag, off, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    values.push_back(0.5 * (lo + hi));
  }
  return values;
}

FdResult fd_eigensolver(const PotentialParams& p, const Grid1D& g) {
  p.validate();
  if (g.N < 100 || !(g.L > 0.0)) {
    throw DomainError("fd_eigensolver: grid needs L > 0 and N >= 100");
  }
  const double h = g.spacing();
  const double inv_h2 = 1.0 / (h * h);

  std::vector<double> diag(g.N);
  std::vector<double> off(g.N - 1, -inv_h2);
  double max_v = 0.0;
  for (int i = 0; i < g.N; ++i) {
    const double x = -g.L + (i + 1) * h;
    const double v = p.potential(x);
    max_v = std::max(max_v, std::abs(v));
    diag[i] = 2.0 * inv_h2 + v;
  }

  FdResult result;
  result.coarse_grid = h * h * max_v > 0.1;
  result.eigenvalues = tridiagonal_eigenvalues_below(diag, off, -2.0 * std::abs(p.beta));
  return result;
}

}  // namespace rosenmorse::oracles
