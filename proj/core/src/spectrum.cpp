#include "rosenmorse/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rosenmorse/errors.hpp"
#include "rosenmorse/specfun.hpp"

namespace rosenmorse {

void PotentialParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("potential parameters must be finite");
  }
  if (!(alpha > 0.0)) {
    throw DomainError("alpha must be positive, got " + std::to_string(alpha));
  }
  if (scale) {
    if (!(scale->delta > 0.0) || !(scale->mass > 0.0) || !(scale->hbar > 0.0)) {
      throw DomainError("physical scale entries must be positive");
    }
  }
}

double PotentialParams::potential(double x) const {
  const double sech = 1.0 / std::cosh(x);
  return -alpha * (alpha + 1.0) * sech * sech + 2.0 * beta * std::tanh(x);
}

int count_bound_states(const PotentialParams& p) {
  p.validate();
  // n < alpha - sqrt|beta|; for beta < 0 the problem is the mirror image of
  // the |beta| one.
  const double limit = p.alpha - std::sqrt(std::abs(p.beta));
  if (limit <= kBoundTolerance) return 0;
  int count = static_cast<int>(std::ceil(limit - kBoundTolerance));
  while (count > 0 && !(limit - (count - 1) > kBoundTolerance)) --count;
  return count;
}

namespace {

void require_bound(const PotentialParams& p, int n) {
  const int count = count_bound_states(p);
  if (n < 0 || n >= count) {
    throw UnboundStateError("state n=" + std::to_string(n) +
                            " is not bound (bound states: " +
                            std::to_string(count) + ")");
  }
}

}  // namespace

double energy(const PotentialParams& p, int n) {
  require_bound(p, n);
  const double k = p.alpha - n;
  return -k * k - p.beta * p.beta / (k * k);
}

StateExponents exponents(const PotentialParams& p, int n) {
  require_bound(p, n);
  StateExponents e;
  e.n = n;
  e.b = p.alpha - n;
  e.a = p.beta / e.b;
  e.energy = -e.b * e.b - e.a * e.a;
  return e;
}

JacobiParams jacobi_params(const StateExponents& e) {
  JacobiParams j{e.b + e.a, e.b - e.a};
  if (j.A <= kThresholdGuard || j.B <= kThresholdGuard) {
    throw NormalizabilityError("state n=" + std::to_string(e.n) +
                               " is at the normalizability threshold");
  }
  return j;
}

double normalization(const PotentialParams& p, int n) {
  const StateExponents e = exponents(p, n);
  const JacobiParams j = jacobi_params(e);
  const double log_inv_sq = (2.0 * e.b - 1.0) * std::numbers::ln2 +
                            ln_gamma(j.A + n + 1.0) + ln_gamma(j.B + n + 1.0) -
                            ln_gamma(n + 1.0) - ln_gamma(2.0 * e.b + n + 1.0) +
                            std::log(1.0 / j.A + 1.0 / j.B);
  return std::exp(-0.5 * log_inv_sq);
}

double physical_energy(const PotentialParams& p, double e_dimless) {
  if (!p.scale) {
    throw MissingScaleError("physical_energy requires a physical scale");
  }
  const auto& s = *p.scale;
  return s.hbar * s.hbar * e_dimless / (2.0 * s.mass * s.delta * s.delta);
}

}  // namespace rosenmorse
