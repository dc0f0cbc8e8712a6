#pragma once

#include <vector>

#include "rosenmorse/spectrum.hpp"
#include "rosenmorse/wide_real.hpp"

namespace rosenmorse {

// Polynomial in the shifted basis, p(v) = sum_m coeffs[m] (1 - v)^m,
// tagged with the Jacobi parameters it represents.
struct ShiftedPolynomial {
  JacobiParams params;
  std::vector<WideReal> coeffs;

  ShiftedPolynomial() = default;
  ShiftedPolynomial(JacobiParams p, std::vector<WideReal> c) : params(p), coeffs(std::move(c)) {}
  static ShiftedPolynomial from_doubles(JacobiParams p, const std::vector<double>& c);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  [[nodiscard]] double coefficient(int m) const { return static_cast<double>(coeffs.at(m)); }
  [[nodiscard]] std::vector<double> coefficients() const;

  // Value at v, Horner in w = 1 - v.
  [[nodiscard]] double operator()(double v) const { return eval_w(1.0 - v); }
  // Value for a given w = 1 - v; lets callers supply w without rounding loss.
  [[nodiscard]] double eval_w(double w) const;

  // d/dv, again in the shifted basis.
  [[nodiscard]] ShiftedPolynomial derivative() const;
};

// Symmetric (beta = 0) state n as psi_n(x) = sech^{alpha-n} x * sum_m coeffs[m] tanh^m x.
// The normalization constant is folded into the coefficients.
struct TanhPolynomial {
  double alpha = 1.0;
  int n = 0;
  std::vector<double> coeffs;
};

// Fractional order of the Weyl integral that realizes one raising step.
struct WeylOrder {
  double nu = 0.0;

  // nu = beta / ((alpha - n - 1)(alpha - n)), the order used to raise state
  // n to n + 1.
  static WeylOrder for_step(const PotentialParams& p, int n);
};

/// Ground state of the symmetric potential:
/// a_00 = 2^-alpha sqrt(alpha Gamma(2 alpha + 1)) / Gamma(alpha + 1).
TanhPolynomial seed_symmetric(double alpha);

/// Applies the local raising operator a^+ = -cosh x d/dx + (alpha - n) sinh x
/// to the tanh-basis coefficients:
///
///   a_{m,n+1} = sqrt((alpha-n-1) / ((n+1)(2alpha-n)(alpha-n)))
///               * [(2alpha - 2n + m - 1) a_{m-1,n} - (m + 1) a_{m+1,n}]
///
/// Throws UnboundStateError if state n + 1 is not bound.
TanhPolynomial raise_symmetric(const TanhPolynomial& t);

/// P_n^{A,B} -> P_{n+1}^{A-1,B-1} through
///   2(n+1) P_{n+1}^{A-1,B-1} = [-(1-v^2) d/dv + (A+B) v + (A-B)] P_n^{A,B},
/// which in the shifted basis reads
///   2(n+1) b_m = -(A + B + m - 1) a_{m-1} + 2(A + m) a_m.
ShiftedPolynomial apply_recjac(const ShiftedPolynomial& a);

/// Weyl fractional integral of order nu acting on (1-v)^{A} P_N^{A,B}(v)
/// yields (1-v)^{A+nu} P_N^{A+nu,B-nu}(v) up to a constant; on coefficients
/// this is the rescaling
///
///   c_m = Gamma(A+nu+N+1) Gamma(A+m+1) / (Gamma(A+N+1) Gamma(A+m+nu+1)) b_m
///
/// with (A, B) = b.params and N = b.degree(). Throws DomainError if a Gamma
/// argument is not positive.
ShiftedPolynomial weyl_shift(const ShiftedPolynomial& b, WeylOrder w);

/// One raising step of the general potential: P of state n to P of state
/// n + 1 (apply_recjac, then weyl_shift with WeylOrder::for_step).
ShiftedPolynomial raise_general(const ShiftedPolynomial& c, const PotentialParams& p, int n);

/// Re-expands sum_m c_m (1 - v)^m into monomial coefficients of v.
std::vector<double> convert_basis(const ShiftedPolynomial& c);

}  // namespace rosenmorse
