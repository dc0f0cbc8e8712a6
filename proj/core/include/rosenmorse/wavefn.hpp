#pragma once

#include <optional>
#include <vector>

#include "rosenmorse/ladder.hpp"
#include "rosenmorse/spectrum.hpp"

namespace rosenmorse {

// Bound state psi_n(x) = norm * exp(-a x) sech^b(x) * poly(tanh x).
// Immutable once built.
struct Eigenstate {
  PotentialParams potential;
  int n = 0;
  StateExponents exponents;
  double norm = 0.0;
  ShiftedPolynomial poly;
};

struct StateDerivatives {
  double psi = 0.0;
  double dpsi = 0.0;
  double d2psi = 0.0;
};

// Uniformly sampled wave function, optionally with V(x) and E_n.
struct SampleTable {
  std::vector<double> xs;
  std::vector<double> psis;
  std::optional<std::vector<double>> potential;
  std::optional<double> energy;
};

/// Runs the raising chain from P_0 = 1 up to state n.
Eigenstate build_state(const PotentialParams& p, int n);

/// All bound states of p, sharing one raising chain.
std::vector<Eigenstate> build_states(const PotentialParams& p);

double eval_state(const Eigenstate& s, double x);

/// psi, psi' and psi'' from the closed form, differentiating in v = tanh x
/// with dv/dx = 1 - v^2.
StateDerivatives eval_derivatives(const Eigenstate& s, double x);

/// r(x) = -psi'' - alpha(alpha+1) sech^2 x psi + 2 beta tanh x psi - E_n psi.
double schrodinger_residual(const Eigenstate& s, double x);

/// Strict sign changes of psi on `points` uniform samples of [lo, hi].
/// Grid points where psi is exactly zero are skipped.
int node_count(const Eigenstate& s, double lo, double hi, int points);

SampleTable sample(const Eigenstate& s, double lo, double hi, int points,
                   bool with_potential = false);

}  // namespace rosenmorse
