#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "rosenmorse/errors.hpp"
#include "rosenmorse/oracles.hpp"
#include "rosenmorse/specfun.hpp"
#include "rosenmorse/wavefn.hpp"

using namespace rosenmorse;
using namespace rosenmorse::oracles;

namespace {

const PotentialParams kWell{3.3, 0.5, {}};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(JacobiThreeTerm, Examples) {
  EXPECT_EQ(jacobi_three_term(1.7, 0.3, 0, 0.42), 1.0);
  EXPECT_NEAR(jacobi_three_term(0.0, 0.0, 2, 0.6), 0.04, 1e-15);
  EXPECT_NEAR(jacobi_three_term(2.5173913, 2.0826087, 1, 0.0), 0.2173913, 1e-15);
}

TEST(JacobiThreeTerm, LegendreClosedForms) {
  for (double v : {-0.7, 0.1, 0.9}) {
    EXPECT_NEAR(jacobi_three_term(0.0, 0.0, 3, v), 0.5 * (5 * v * v * v - 3 * v), 1e-15);
    EXPECT_NEAR(jacobi_three_term(0.0, 0.0, 4, v), (35 * std::pow(v, 4) - 30 * v * v + 3) / 8,
                1e-15);
  }
}

TEST(JacobiThreeTerm, DegenerateParameters) {
  // 2k + A + B vanishes at k = 1.
  EXPECT_THROW(jacobi_three_term(-1.0, -1.0, 3, 0.2), DegenerateParametersError);
  EXPECT_THROW(jacobi_three_term_coeffs(-1.0, -1.0, 3), DegenerateParametersError);
  EXPECT_THROW(jacobi_three_term(1.0, 1.0, -1, 0.2), DomainError);
}

TEST(JacobiThreeTermCoeffs, ReproduceValues) {
  // Rounding in the coefficients is amplified by sum |c_m| w^m, so that is
  // the scale of the comparison.
  for (int n = 0; n <= 12; ++n) {
    const auto coeffs = jacobi_three_term_coeffs(3.45, 3.15, n);
    const auto c = ShiftedPolynomial::from_doubles({3.45, 3.15}, coeffs);
    ASSERT_EQ(c.degree(), n);
    for (double v : {-0.9, 0.0, 0.5}) {
      double scale = 0.0;
      for (int m = 0; m <= n; ++m) scale += std::abs(coeffs[m]) * std::pow(1.0 - v, m);
      EXPECT_NEAR(c(v), jacobi_three_term(3.45, 3.15, n, v), 1e-14 * scale) << n << " " << v;
    }
  }
}

TEST(JacobiHypergeometric, AgreesWithThreeTerm) {
  for (const auto& [A, B] : std::vector<std::pair<double, double>>{{0, 0}, {3.45, 3.15}, {1.68, 0.92}}) {
    for (int n = 0; n <= 10; ++n) {
      double scale = 0.0;
      for (double v : {-0.9, 0.0, 0.5}) scale = std::max(scale, std::abs(jacobi_three_term(A, B, n, v)));
      for (double v : {-0.9, 0.0, 0.5}) {
        EXPECT_NEAR(jacobi_hypergeometric(A, B, n, v), jacobi_three_term(A, B, n, v), 1e-11 * scale)
            << A << " " << B << " " << n << " " << v;
      }
    }
  }
}

TEST(JacobiHypergeometric, EndpointAndErrors) {
  EXPECT_EQ(jacobi_hypergeometric(2.0, 1.0, 0, 0.3), 1.0);
  for (int n = 0; n < 8; ++n) {
    EXPECT_LE(rel(jacobi_hypergeometric(2.2, 0.7, n, 1.0), generalized_binomial(2.2 + n, n)), 1e-13);
  }
  EXPECT_THROW(jacobi_hypergeometric(-1.5, 0.0, 2, 0.0), DomainError);
}

TEST(HypergeometricParams, StateFormMatchesJacobi) {
  // F(r, s; t; u) with u = (1 + v)/2 is (-1)^n P_n^{A,B}(v) / binom(n + B, n).
  for (const auto& st : build_states({5.5, 0.5, {}})) {
    const HypergeometricParams h = HypergeometricParams::for_state(st.potential, st.exponents);
    const int n = st.n;
    EXPECT_NEAR(h.r, -n, 1e-14);
    for (double v : {-0.6, 0.2, 0.8}) {
      const double u = 0.5 * (1.0 + v);
      double term = 1.0;
      double sum = 1.0;
      for (int k = 0; k < n; ++k) {
        term *= (h.r + k) * (h.s + k) / ((h.t + k) * (k + 1.0)) * u;
        sum += term;
      }
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      const double want = sign * st.poly(v) / generalized_binomial(n + st.poly.params.B, n);
      EXPECT_NEAR(sum, want, 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(JacobiBinomialExpansion, Examples) {
  EXPECT_EQ(jacobi_binomial_expansion(2.0, 3.0, 0, 0.4), 1.0);
  for (double v : {-0.5, 0.25}) {
    EXPECT_NEAR(jacobi_binomial_expansion(2.3, 1.1, 1, v), 0.5 * ((2.3 + 1.1) * v + 2.3 - 1.1), 1e-15);
  }
  const double A = 3.45;
  const double B = 3.15;
  for (int n = 0; n <= 10; ++n) {
    for (double v : {-0.9, 0.0, 0.5}) {
      const double t = jacobi_three_term(A, B, n, v);
      EXPECT_NEAR(jacobi_binomial_expansion(A + n, B + n, n, v), t, 1e-10 * std::max(1.0, std::abs(t)));
    }
  }
}

TEST(GeneratingFunction, TaylorCoefficientsAreJacobi) {
  // sum_{n<8} P_n^{alpha-n, beta-n}(v) s^n against the closed form; the
  // truncation error is O(s^8).
  for (const auto& [ag, bg] : std::vector<std::pair<double, double>>{{3.45, 3.15}, {5.2, 0.8}, {2.0, 2.0}}) {
    for (double v : {-0.8, 0.1, 0.7}) {
      for (double s : {0.02, 0.05, 0.1}) {
        double series = 0.0;
        for (int n = 0; n < 8; ++n) {
          series += jacobi_binomial_expansion(ag, bg, n, v) * std::pow(s, n);
        }
        EXPECT_NEAR(series, jacobi_generating_function(ag, bg, v, s), 1e-7)
            << ag << " " << bg << " " << v << " " << s;
      }
    }
  }
}

TEST(WeylQuadrature, OrdinaryIntegralOfOne) {
  const auto one = ShiftedPolynomial::from_doubles({0.0, 0.0}, {1.0});
  for (double u : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(weyl_integral_quadrature(one, 0.0, 1.0, u), 1.0 - u, 1e-12);
  }
}

TEST(WeylQuadrature, HalfOrderAtZero) {
  // Exactly u = 0 is outside the open interval; approach it instead.
  const auto one = ShiftedPolynomial::from_doubles({0.0, 0.0}, {1.0});
  const double u = 1e-12;
  EXPECT_NEAR(weyl_integral_quadrature(one, 0.0, 0.5, u), 1.1283791670955126, 1e-10);
}

TEST(WeylQuadrature, DegreeOneClosedForm) {
  const double A = 2.3;
  const double B = 1.4;
  const auto p1 = ShiftedPolynomial::from_doubles({A, B}, jacobi_three_term_coeffs(A, B, 1));
  for (double nu : {0.0658762, 0.3, 0.8, 1.7}) {
    for (double u : {0.1, 0.5, 0.9}) {
      const double closed = std::pow(1.0 - u, A + nu) * gamma_ratio(A + 2.0, A + nu + 2.0) *
                            jacobi_three_term(A + nu, B - nu, 1, 2.0 * u - 1.0);
      EXPECT_LE(rel(weyl_integral_quadrature(p1, A, nu, u), closed), 1e-9) << nu << " " << u;
    }
  }
}

TEST(WeylQuadrature, WitnessesCoefficientMap) {
  const double A = 3.7;
  const double B = 2.2;
  const int N = 5;
  const auto b = ShiftedPolynomial::from_doubles({A, B}, jacobi_three_term_coeffs(A, B, N));
  for (double nu : {0.0658762, 0.3, 0.8}) {
    const auto c = weyl_shift(b, WeylOrder{nu});
    for (double u : {0.1, 0.5, 0.9}) {
      const double shape = std::pow(1.0 - u, A + nu) * gamma_ratio(A + N + 1.0, A + nu + N + 1.0);
      EXPECT_LE(rel(weyl_integral_quadrature(b, A, nu, u), shape * c(2.0 * u - 1.0)), 1e-6);
    }
  }
}

TEST(WeylQuadrature, DomainErrors) {
  const auto one = ShiftedPolynomial::from_doubles({0.0, 0.0}, {1.0});
  EXPECT_THROW(weyl_integral_quadrature(one, 0.0, 0.0, 0.5), DomainError);
  EXPECT_THROW(weyl_integral_quadrature(one, 0.0, 0.5, 0.0), DomainError);
  EXPECT_THROW(weyl_integral_quadrature(one, 0.0, 0.5, 1.0), DomainError);
  EXPECT_THROW(weyl_integral_quadrature(one, -1.0, 0.5, 0.5), DomainError);
}

TEST(TridiagonalEigenvalues, KnownSpectrum) {
  // -1, 2, -1 on 5 points: eigenvalues 2 - 2 cos(k pi / 6).
  const std::vector<double> diag(5, 2.0);
  const std::vector<double> off(4, -1.0);
  const auto ev = tridiagonal_eigenvalues_below(diag, off, 10.0);
  ASSERT_EQ(ev.size(), 5u);
  for (int k = 1; k <= 5; ++k) {
    EXPECT_NEAR(ev[k - 1], 2.0 - 2.0 * std::cos(k * M_PI / 6.0), 1e-13);
  }
  EXPECT_EQ(tridiagonal_eigenvalues_below(diag, off, 1.0).size(), 2u);
  EXPECT_THROW(tridiagonal_eigenvalues_below(diag, std::vector<double>(2, 0.0), 1.0), DomainError);
}

TEST(FdEigensolver, AlphaOne) {
  const FdResult r = fd_eigensolver({1.0, 0.0, {}}, Grid1D{15.0, 3000});
  ASSERT_EQ(r.eigenvalues.size(), 1u);
  EXPECT_NEAR(r.eigenvalues[0], -1.0, 1e-3);
}

TEST(FdEigensolver, ThreeStateWell) {
  const FdResult r = fd_eigensolver(kWell, Grid1D{16.0, 4000});
  ASSERT_EQ(r.eigenvalues.size(), 3u);
  EXPECT_FALSE(r.coarse_grid);
  for (int n = 0; n < 3; ++n) EXPECT_LE(rel(r.eigenvalues[n], energy(kWell, n)), 2e-3);
}

TEST(FdEigensolver, CountMatchesSpectrum) {
  for (double alpha : {3.3, 5.5}) {
    for (double beta : {0.0, 0.5, 3.0}) {
      const PotentialParams p{alpha, beta, {}};
      EXPECT_EQ(static_cast<int>(fd_eigensolver(p, Grid1D{16.0, 4000}).eigenvalues.size()),
                count_bound_states(p))
          << alpha << " " << beta;
    }
  }
  EXPECT_TRUE(fd_eigensolver({0.5, 0.4, {}}, Grid1D{16.0, 4000}).eigenvalues.empty());
}

TEST(FdEigensolver, FlagsCoarseGrid) {
  EXPECT_TRUE(fd_eigensolver({25.0, 0.0, {}}, Grid1D{16.0, 200}).coarse_grid);
  EXPECT_THROW(fd_eigensolver(kWell, Grid1D{16.0, 50}), DomainError);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const QuadratureRule q = gauss_legendre(10);
  ASSERT_EQ(q.nodes.size(), 10u);
  EXPECT_NEAR(std::accumulate(q.weights.begin(), q.weights.end(), 0.0), 2.0, 1e-14);
  for (int k = 0; k < 20; k += 2) {
    double sum = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) sum += q.weights[i] * std::pow(q.nodes[i], k);
    EXPECT_NEAR(sum, 2.0 / (k + 1), 1e-14) << k;
  }
  EXPECT_THROW(gauss_legendre(0), DomainError);
}

TEST(Overlap, ThreeStateWell) {
  const auto states = build_states(kWell);
  for (const auto& s : states) EXPECT_NEAR(overlap(s, s), 1.0, 1e-7);
  EXPECT_NEAR(overlap(states[0], states[1]), 0.0, 1e-7);
  EXPECT_NEAR(overlap(states[1], states[2]), 0.0, 1e-7);
}

TEST(Overlap, OppositeParityVanishes) {
  const auto states = build_states({5.5, 0.0, {}});
  EXPECT_NEAR(overlap(states[0], states[1]), 0.0, 1e-12);
  EXPECT_NEAR(overlap(states[2], states[5]), 0.0, 1e-12);
}

TEST(Overlap, MismatchedPotentials) {
  EXPECT_THROW(overlap(build_state(kWell, 0), build_state({3.3, 0.4, {}}, 0)), ParameterMismatchError);
}

TEST(Ladder, FactorIdentity) {
  for (double alpha : {2.0, 5.5, 9.25}) {
    for (int n = 0; n + 1 < alpha; ++n) {
      const double f = raising_factor(alpha, n);
      EXPECT_NEAR(f * f * (alpha - n - 1.0) / (alpha - n), (n + 1.0) * (2.0 * alpha - n),
                  1e-12 * (n + 1.0) * (2.0 * alpha - n));
    }
  }
}

TEST(Ladder, NumericCheckExamples) {
  EXPECT_NEAR(ladder_numeric_check({2.0, 0.0, {}}, 0, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(ladder_numeric_check({2.0, 0.0, {}}, 0, 1.0), 0.0, 1e-9);
  EXPECT_NEAR(ladder_numeric_check({5.5, 0.0, {}}, 3, -0.7), 0.0, 1e-9);
}

TEST(Ladder, ClosedFormAlphaTwo) {
  // psi_0 = (sqrt3/2) sech^2 x, psi_1 = sqrt(3/2) sech x tanh x
  const double x = 1.0;
  const double sech = 1.0 / std::cosh(x);
  const double psi0 = std::sqrt(3.0) / 2.0 * sech * sech;
  const double dpsi0 = -2.0 * std::tanh(x) * psi0;
  const double raised = -std::cosh(x) * dpsi0 + 2.0 * std::sinh(x) * psi0;
  const double psi1 = std::sqrt(1.5) * sech * std::tanh(x);
  EXPECT_NEAR(raised, raising_factor(2.0, 0) * psi1, 1e-14);
}

TEST(Ladder, RejectsAsymmetricPotential) {
  EXPECT_THROW(ladder_numeric_check(kWell, 0, 0.3), SymmetricOnlyError);
}
