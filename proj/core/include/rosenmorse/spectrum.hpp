#pragma once

#include <optional>

namespace rosenmorse {

// Unit conversion for the dimensionless problem: x_phys = delta * x and
// energies in units of hbar^2 / (2 m delta^2).
struct PhysicalScale {
  double delta = 1.0;
  double mass = 1.0;
  double hbar = 1.0;
};

// Dimensionless Rosen-Morse potential
//   V(x) = -alpha (alpha + 1) sech^2 x + 2 beta tanh x.
struct PotentialParams {
  double alpha = 1.0;
  double beta = 0.0;
  std::optional<PhysicalScale> scale;

  // Throws DomainError unless alpha > 0 and both parameters are finite.
  void validate() const;

  [[nodiscard]] double potential(double x) const;
};

// Decay exponents of bound state n: psi ~ exp(-(b + a) x) at +inf and
// exp((b - a) x) at -inf.
struct StateExponents {
  int n = 0;
  double energy = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// Parameters (A, B) of the Jacobi polynomial P_n^{A,B}(tanh x) in psi_n.
struct JacobiParams {
  double A = 0.0;
  double B = 0.0;
};

// Tolerance on n < alpha - sqrt|beta|; a state exactly at the boundary is
// not bound.
inline constexpr double kBoundTolerance = 1e-12;
// States with min(A, B) at or below this are rejected as unnormalizable.
inline constexpr double kThresholdGuard = 1e-9;

int count_bound_states(const PotentialParams& p);

// Dimensionless E_n = -(alpha - n)^2 - beta^2 / (alpha - n)^2.
double energy(const PotentialParams& p, int n);

StateExponents exponents(const PotentialParams& p, int n);

JacobiParams jacobi_params(const StateExponents& e);

/// Positive normalization constant A_n. Evaluated from the closed form for
/// |A_n|^-2 in log space:
///
///   2^{2b-1} Gamma(b+a+n+1) Gamma(b-a+n+1) / (n! Gamma(2b+n+1))
///     * (1/(b+a) + 1/(b-a))
double normalization(const PotentialParams& p, int n);

/// hbar^2 e / (2 m delta^2). Throws MissingScaleError if p.scale is empty.
double physical_energy(const PotentialParams& p, double e_dimless);

}  // namespace rosenmorse
