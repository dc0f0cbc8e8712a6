#include "rosenmorse/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "rosenmorse/errors.hpp"
#include "rosenmorse/specfun.hpp"

namespace rosenmorse {

namespace {

WideReal wide_ln_gamma(const WideReal& x) { return boost::math::lgamma(x); }

}  // namespace

ShiftedPolynomial ShiftedPolynomial::from_doubles(JacobiParams p, const std::vector<double>& c) {
  return {p, std::vector<WideReal>(c.begin(), c.end())};
}

std::vector<double> ShiftedPolynomial::coefficients() const {
  std::vector<double> out(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), out.begin(),
                 [](const WideReal& c) { return static_cast<double>(c); });
  return out;
}

double ShiftedPolynomial::eval_w(double w) const {
  const WideReal ww = w;
  WideReal acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * ww + *it;
  return static_cast<double>(acc);
}

ShiftedPolynomial ShiftedPolynomial::derivative() const {
  // d/dv (1 - v)^m = -m (1 - v)^{m-1}
  ShiftedPolynomial d{params, {}};
  if (coeffs.size() <= 1) {
    d.coeffs = {WideReal(0)};
    return d;
  }
  d.coeffs.resize(coeffs.size() - 1);
  for (std::size_t m = 1; m < coeffs.size(); ++m) {
    d.coeffs[m - 1] = -static_cast<double>(m) * coeffs[m];
  }
  return d;
}

WeylOrder WeylOrder::for_step(const PotentialParams& p, int n) {
  return {p.beta / ((p.alpha - n - 1.0) * (p.alpha - n))};
}

TanhPolynomial seed_symmetric(double alpha) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    throw DomainError("seed_symmetric: alpha must be positive");
  }
  const double log_a00 = -alpha * std::numbers::ln2 +
                         0.5 * (std::log(alpha) + ln_gamma(2.0 * alpha + 1.0)) -
                         ln_gamma(alpha + 1.0);
  return {alpha, 0, {std::exp(log_a00)}};
}

TanhPolynomial raise_symmetric(const TanhPolynomial& t) {
  const double alpha = t.alpha;
  const int n = t.n;
  if (!(alpha - (n + 1) > kBoundTolerance)) {
    throw UnboundStateError("raise_symmetric: state n=" + std::to_string(n + 1) +
                            " is not bound for alpha=" + std::to_string(alpha));
  }
  const double factor =
      std::sqrt((alpha - n - 1.0) / ((n + 1.0) * (2.0 * alpha - n) * (alpha - n)));

  const auto& prev = t.coeffs;
  const auto at = [&prev](int m) {
    return (m >= 0 && m < static_cast<int>(prev.size())) ? prev[m] : 0.0;
  };

  TanhPolynomial next{alpha, n + 1, std::vector<double>(n + 2, 0.0)};
  for (int m = 0; m <= n + 1; ++m) {
    // Entries of the wrong parity stay exactly zero.
    if ((m + n + 1) % 2 != 0) continue;
    next.coeffs[m] =
        factor * ((2.0 * alpha - 2.0 * n + m - 1.0) * at(m - 1) - (m + 1.0) * at(m + 1));
  }
  return next;
}

ShiftedPolynomial apply_recjac(const ShiftedPolynomial& a) {
  const WideReal A = a.params.A;
  const WideReal B = a.params.B;
  const int n = a.degree();
  const WideReal scale = WideReal(1) / (2 * (n + 1));

  ShiftedPolynomial b{{a.params.A - 1.0, a.params.B - 1.0}, std::vector<WideReal>(n + 2)};
  for (int m = 0; m <= n + 1; ++m) {
    WideReal sum = 0;
    if (m >= 1) sum -= (A + B + (m - 1)) * a.coeffs[m - 1];
    if (m <= n) sum += 2 * (A + m) * a.coeffs[m];
    b.coeffs[m] = scale * sum;
  }
  return b;
}

ShiftedPolynomial weyl_shift(const ShiftedPolynomial& b, WeylOrder w) {
  const int N = b.degree();
  ShiftedPolynomial c{{b.params.A + w.nu, b.params.B - w.nu}, b.coeffs};
  if (w.nu == 0.0) return c;

  if (!(b.params.A + 1.0 > 0.0) || !(b.params.A + w.nu + 1.0 > 0.0)) {
    throw DomainError("weyl_shift: non-positive Gamma argument (A=" + std::to_string(b.params.A) +
                      ", nu=" + std::to_string(w.nu) + ")");
  }
  const WideReal A = b.params.A;
  const WideReal nu = w.nu;
  const WideReal head = wide_ln_gamma(A + nu + N + 1) - wide_ln_gamma(A + N + 1);
  for (int m = 0; m <= N; ++m) {
    const WideReal log_ratio = head + wide_ln_gamma(A + m + 1) - wide_ln_gamma(A + m + nu + 1);
    c.coeffs[m] *= exp(log_ratio);
  }
  return c;
}

ShiftedPolynomial raise_general(const ShiftedPolynomial& c, const PotentialParams& p, int n) {
  if (c.degree() != n) {
    throw ParameterMismatchError("raise_general: polynomial degree " +
                                 std::to_string(c.degree()) + " does not match n=" +
                                 std::to_string(n));
  }
  const JacobiParams current = jacobi_params(exponents(p, n));
  const JacobiParams target = jacobi_params(exponents(p, n + 1));
  const auto close = [](double x, double y) {
    return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y));
  };
  if (!close(c.params.A, current.A) || !close(c.params.B, current.B)) {
    throw ParameterMismatchError("raise_general: polynomial parameters do not match state n=" +
                                 std::to_string(n));
  }

  ShiftedPolynomial raised =
      weyl_shift(apply_recjac({current, c.coeffs}), WeylOrder::for_step(p, n));
  // The shift lands on `target` up to rounding; store the exact values.
  raised.params = target;
  return raised;
}

std::vector<double> convert_basis(const ShiftedPolynomial& c) {
  // (1 - v)^m = sum_k binom(m, k) (-v)^k
  const int n = c.degree();
  std::vector<WideReal> mono(n + 1);
  for (int m = 0; m <= n; ++m) {
    WideReal binom = 1;
    for (int k = 0; k <= m; ++k) {
      mono[k] += ((k % 2 == 0) ? binom : WideReal(-binom)) * c.coeffs[m];
      binom = binom * (m - k) / (k + 1);
    }
  }
  std::vector<double> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = static_cast<double>(mono[k]);
  return out;
}

}  // namespace rosenmorse
