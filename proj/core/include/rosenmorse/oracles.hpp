#pragma once

#include <vector>

#include "rosenmorse/ladder.hpp"
#include "rosenmorse/spectrum.hpp"
#include "rosenmorse/wavefn.hpp"

// Independent numerical paths used to check the raising recurrences. None of
// these call into apply_recjac / weyl_shift / raise_general.
namespace rosenmorse::oracles {

// Parameters of F(r, s; t; u). For a bound state r = b - alpha, s = b +
// alpha + 1, t = b - a + 1 and u = (1 + tanh x) / 2.
struct HypergeometricParams {
  double r = 0.0;
  double s = 0.0;
  double t = 1.0;

  static HypergeometricParams for_state(const PotentialParams& p, const StateExponents& e);
};

// Dirichlet box [-L, L] with N interior points, spacing h = 2L / (N + 1).
struct Grid1D {
  double L = 16.0;
  int N = 4000;

  [[nodiscard]] double spacing() const { return 2.0 * L / (N + 1); }
};

struct FdResult {
  std::vector<double> eigenvalues;  // below -2|beta|, increasing
  bool coarse_grid = false;         // h^2 max|V| > 0.1
};

/// P_n^{A,B}(v) by the fixed-parameter three-term recurrence
///
///   2(k+1)(k+A+B+1)(2k+A+B) P_{k+1}
///     = (2k+A+B+1)[(2k+A+B)(2k+A+B+2) v + A^2 - B^2] P_k
///       - 2(k+A)(k+B)(2k+A+B+2) P_{k-1}
///
/// from P_0 = 1, P_1 = ((A+B+2) v + A - B) / 2. Throws
/// DegenerateParametersError when a denominator vanishes.
double jacobi_three_term(double A, double B, int n, double v);

/// The same recurrence run on shifted-basis coefficient vectors; returns
/// c_0..c_n with P_n^{A,B}(v) = sum c_m (1 - v)^m.
std::vector<double> jacobi_three_term_coeffs(double A, double B, int n);

/// Terminating hypergeometric form
///   P_n^{A,B}(v) = Gamma(n+A+1) / (n! Gamma(A+1)) F(-n, n+A+B+1; A+1; (1-v)/2).
/// Requires A > -1.
double jacobi_hypergeometric(double A, double B, int n, double v);

/// P_n^{alpha-n, beta-n}(v) = 2^-n sum_m binom(alpha, m) binom(beta, n-m)
///                                   (v-1)^{n-m} (v+1)^m
double jacobi_binomial_expansion(double alpha_gf, double beta_gf, int n, double v);

/// Closed-form generating function [1 + (v+1)s/2]^alpha [1 + (v-1)s/2]^beta,
/// whose s^n Taylor coefficient is P_n^{alpha-n, beta-n}(v).
double jacobi_generating_function(double alpha_gf, double beta_gf, double v, double s);

/// Weyl fractional integral
///   W^nu[f](u) = 1/Gamma(nu) int_u^1 (t - u)^{nu-1} f(t) dt
/// of f(t) = (1 - t)^exponent * poly(2t - 1), by tanh-sinh quadrature.
/// `u` lives on (0, 1); poly is evaluated at the mapped v = 2t - 1.
/// Throws ToleranceNotMetError if the error estimate exceeds `tol`
/// (relative).
double weyl_integral_quadrature(const ShiftedPolynomial& poly, double exponent, double nu, double u,
                                double tol = 1e-9);

/// Eigenvalues below -2|beta| of the 3-point finite-difference Hamiltonian
/// -d^2/dx^2 + V(x) on the Dirichlet box, by Sturm-sequence bisection.
FdResult fd_eigensolver(const PotentialParams& p, const Grid1D& g);

/// Eigenvalues of the symmetric tridiagonal matrix (diag, off) that lie
/// strictly below `upper`, in increasing order.
std::vector<double> tridiagonal_eigenvalues_below(const std::vector<double>& diag,
                                                  const std::vector<double>& off, double upper);

/// <psi_1 | psi_2> by composite Gauss-Legendre on [-L, L], with L from the
/// slowest decay exponent so that the neglected tails are below 1e-12.
double overlap(const Eigenstate& s1, const Eigenstate& s2);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int points);

/// sqrt((n+1)(2 alpha - n)(alpha - n) / (alpha - n - 1)), with
/// a^+|n> = factor |n+1> in the symmetric potential.
double raising_factor(double alpha, int n);

/// [-cosh x psi_n' + (alpha - n) sinh x psi_n] - raising_factor * psi_{n+1}
/// at x, for beta = 0. Zero up to rounding when the raising operator and its
/// factor are right.
double ladder_numeric_check(const PotentialParams& p, int n, double x);

}  // namespace rosenmorse::oracles
