#include "rosenmorse/wavefn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rosenmorse/errors.hpp"

namespace rosenmorse {

namespace {

// ln cosh x without overflow.
double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

// exp(-a x) sech^b x
double envelope(const StateExponents& e, double x) {
  return std::exp(-e.a * x - e.b * log_cosh(x));
}

// 1 - tanh x = 2 / (1 + e^{2x}), exact to rounding for large positive x.
double one_minus_tanh(double x) { return 2.0 / (1.0 + std::exp(2.0 * x)); }

Eigenstate make_state(const PotentialParams& p, int n, ShiftedPolynomial poly) {
  Eigenstate s;
  s.potential = p;
  s.n = n;
  s.exponents = exponents(p, n);
  s.norm = normalization(p, n);
  s.poly = std::move(poly);
  return s;
}

void check_grid(double lo, double hi, int points, int min_points) {
  if (!(lo < hi) || points < min_points) {
    throw DomainError("grid requires lo < hi and at least " + std::to_string(min_points) +
                      " points");
  }
}

}  // namespace

Eigenstate build_state(const PotentialParams& p, int n) {
  const int count = count_bound_states(p);
  if (n < 0 || n >= count) {
    throw UnboundStateError("state n=" + std::to_string(n) + " is not bound (bound states: " +
                            std::to_string(count) + ")");
  }
  ShiftedPolynomial poly{jacobi_params(exponents(p, 0)), {WideReal(1)}};
  for (int k = 0; k < n; ++k) poly = raise_general(poly, p, k);
  return make_state(p, n, std::move(poly));
}

std::vector<Eigenstate> build_states(const PotentialParams& p) {
  const int count = count_bound_states(p);
  std::vector<Eigenstate> states;
  states.reserve(count);
  if (count == 0) return states;
  ShiftedPolynomial poly{jacobi_params(exponents(p, 0)), {WideReal(1)}};
  for (int k = 0; k < count; ++k) {
    if (k > 0) poly = raise_general(poly, p, k - 1);
    states.push_back(make_state(p, k, poly));
  }
  return states;
}

double eval_state(const Eigenstate& s, double x) {
  return s.norm * envelope(s.exponents, x) * s.poly.eval_w(one_minus_tanh(x));
}

StateDerivatives eval_derivatives(const Eigenstate& s, double x) {
  const double a = s.exponents.a;
  const double b = s.exponents.b;
  const double v = std::tanh(x);
  const double w = one_minus_tanh(x);
  const double sech2 = std::exp(-2.0 * log_cosh(x));  // 1 - v^2

  const ShiftedPolynomial d1 = s.poly.derivative();
  const ShiftedPolynomial d2 = d1.derivative();

  const double p0 = s.poly.eval_w(w);
  const double p1 = d1.eval_w(w);
  const double p2 = d2.eval_w(w);

  // g = exp(-a x) sech^b x, g' = -(a + b v) g,
  // g'' = [(a + b v)^2 - b (1 - v^2)] g.
  const double g = s.norm * envelope(s.exponents, x);
  const double lin = a + b * v;
  // q(x) = p(v(x)): q' = p'(v)(1 - v^2), q'' = (1 - v^2)^2 p'' - 2 v (1 - v^2) p'.
  const double q1 = sech2 * p1;
  const double q2 = sech2 * sech2 * p2 - 2.0 * v * sech2 * p1;

  StateDerivatives d;
  d.psi = g * p0;
  d.dpsi = g * (q1 - lin * p0);
  d.d2psi = g * ((lin * lin - b * sech2) * p0 - 2.0 * lin * q1 + q2);
  return d;
}

double schrodinger_residual(const Eigenstate& s, double x) {
  const StateDerivatives d = eval_derivatives(s, x);
  const double alpha = s.potential.alpha;
  const double beta = s.potential.beta;
  const double sech2 = std::exp(-2.0 * log_cosh(x));
  return -d.d2psi - alpha * (alpha + 1.0) * sech2 * d.psi + 2.0 * beta * std::tanh(x) * d.psi -
         s.exponents.energy * d.psi;
}

int node_count(const Eigenstate& s, double lo, double hi, int points) {
  check_grid(lo, hi, points, 100);
  const double h = (hi - lo) / (points - 1);
  int nodes = 0;
  int last_sign = 0;
  for (int i = 0; i < points; ++i) {
    const double psi = eval_state(s, lo + i * h);
    const int sign = (psi > 0.0) - (psi < 0.0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

SampleTable sample(const Eigenstate& s, double lo, double hi, int points, bool with_potential) {
  check_grid(lo, hi, points, 2);
  SampleTable t;
  t.xs.resize(points);
  t.psis.resize(points);
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double x = (i == points - 1) ? hi : lo + i * h;
    t.xs[i] = x;
    t.psis[i] = eval_state(s, x);
  }
  if (with_potential) {
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) v[i] = s.potential.potential(t.xs[i]);
    t.potential = std::move(v);
    t.energy = s.exponents.energy;
  }
  return t;
}

}  // namespace rosenmorse
