#include <cmath>
#include <string>
#include <vector>

#include "rosenmorse/errors.hpp"
#include "rosenmorse/oracles.hpp"
#include "rosenmorse/specfun.hpp"
#include "rosenmorse/wide_real.hpp"

namespace rosenmorse::oracles {

namespace {

struct ThreeTermStep {
  double lead;    // coefficient of v P_k
  double shift;   // constant coefficient of P_k
  double prev;    // coefficient of P_{k-1}
};

// P_{k+1} = (lead v + shift) P_k - prev P_{k-1}
ThreeTermStep three_term_step(double A, double B, int k) {
  const double s = 2.0 * k + A + B;
  const double denom = 2.0 * (k + 1.0) * (k + A + B + 1.0) * s;
  if (s == 0.0 || k + A + B + 1.0 == 0.0) {
    throw DegenerateParametersError("three-term recurrence breaks down at k=" + std::to_string(k) +
                                    " for A=" + std::to_string(A) + ", B=" + std::to_string(B));
  }
  return {(s + 1.0) * s * (s + 2.0) / denom, (s + 1.0) * (A * A - B * B) / denom,
          2.0 * (k + A) * (k + B) * (s + 2.0) / denom};
}

}  // namespace

HypergeometricParams HypergeometricParams::for_state(const PotentialParams& p,
                                                     const StateExponents& e) {
  return {e.b - p.alpha, e.b + p.alpha + 1.0, e.b - e.a + 1.0};
}

double jacobi_three_term(double A, double B, int n, double v) {
  if (n < 0) throw DomainError("jacobi_three_term: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 0.5 * ((A + B + 2.0) * v + A - B);
  for (int k = 1; k < n; ++k) {
    const ThreeTermStep st = three_term_step(A, B, k);
    const double next = (st.lead * v + st.shift) * curr - st.prev * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> jacobi_three_term_coeffs(double A, double B, int n) {
  if (n < 0) throw DomainError("jacobi_three_term_coeffs: negative degree");
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  // v = 1 - w
  std::vector<double> curr{A + 1.0, -0.5 * (A + B + 2.0)};
  for (int k = 1; k < n; ++k) {
    const ThreeTermStep st = three_term_step(A, B, k);
    std::vector<double> next(k + 2, 0.0);
    for (int m = 0; m <= k; ++m) {
      // (lead (1 - w) + shift) * curr
      next[m] += (st.lead + st.shift) * curr[m];
      next[m + 1] -= st.lead * curr[m];
    }
    for (int m = 0; m < k; ++m) next[m] -= st.prev * prev[m];
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

// The two finite sums below alternate in sign and cancel badly for large n,
// so they are accumulated in WideReal.

double jacobi_hypergeometric(double A, double B, int n, double v) {
  if (n < 0) throw DomainError("jacobi_hypergeometric: negative degree");
  if (!(A > -1.0)) throw DomainError("jacobi_hypergeometric: requires A > -1");
  const WideReal a = A;
  const WideReal z = (1 - WideReal(v)) / 2;
  // sum_k (-n)_k (n+A+B+1)_k / ((A+1)_k k!) z^k
  WideReal term = 1;
  WideReal sum = 1;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) * (n + a + B + 1 + k) / ((a + 1 + k) * (k + 1)) * z;
    sum += term;
  }
  // Gamma(n+A+1) / (n! Gamma(A+1)) = binom(n + A, n)
  WideReal prefactor = 1;
  for (int j = 0; j < n; ++j) prefactor *= (n + a - j) / (j + 1);
  return static_cast<double>(prefactor * sum);
}

namespace {

WideReal wide_binomial(const WideReal& alpha, int k) {
  WideReal result = 1;
  for (int j = 0; j < k; ++j) result *= (alpha - j) / (j + 1);
  return result;
}

}  // namespace

double jacobi_binomial_expansion(double alpha_gf, double beta_gf, int n, double v) {
  if (n < 0) throw DomainError("jacobi_binomial_expansion: negative degree");
  const WideReal vm = WideReal(v) - 1;
  const WideReal vp = WideReal(v) + 1;
  WideReal sum = 0;
  for (int m = 0; m <= n; ++m) {
    sum += wide_binomial(alpha_gf, m) * wide_binomial(beta_gf, n - m) * pow(vm, n - m) *
           pow(vp, m);
  }
  return static_cast<double>(ldexp(sum, -n));
}

double jacobi_generating_function(double alpha_gf, double beta_gf, double v, double s) {
  return std::pow(1.0 + 0.5 * (v + 1.0) * s, alpha_gf) *
         std::pow(1.0 + 0.5 * (v - 1.0) * s, beta_gf);
}

}  // namespace rosenmorse::oracles
