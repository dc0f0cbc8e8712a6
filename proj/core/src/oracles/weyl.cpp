#include <cmath>
#include <cstdio>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "rosenmorse/errors.hpp"
#include "rosenmorse/oracles.hpp"
#include "rosenmorse/specfun.hpp"

namespace rosenmorse::oracles {

double weyl_integral_quadrature(const ShiftedPolynomial& poly, double exponent, double nu, double u,
                                double tol) {
  if (!(nu > 0.0)) throw DomainError("weyl_integral_quadrature: nu must be positive");
  if (!(u > 0.0 && u < 1.0)) throw DomainError("weyl_integral_quadrature: u must lie in (0, 1)");
  if (!(exponent > -1.0)) {
    throw DomainError("weyl_integral_quadrature: exponent must exceed -1");
  }

  // t = u + (1 - u) s maps (u, 1) onto (0, 1); then
  //   W = (1-u)^{nu+e} / Gamma(nu) int_0^1 s^{nu-1} (1-s)^e poly(2t - 1) ds.
  // s = w^{1/nu} absorbs the s^{nu-1} singularity, leaving only the
  // algebraic (1-s)^e factor at w = 1. The two-argument form of tanh-sinh
  // supplies 1 - w exactly near that end.
  const auto integrand = [&](double w, double wc) {
    const double log_w = wc > 0.0 ? std::log1p(-wc) : std::log(w);
    const double one_minus_s = -std::expm1(log_w / nu);
    // 1 - v = 2 (1 - t) = 2 (1 - u)(1 - s)
    const double x = 2.0 * (1.0 - u) * one_minus_s;
    return std::pow(one_minus_s, exponent) * poly.eval_w(x) / nu;
  };

  boost::math::quadrature::tanh_sinh<double> rule;
  double err = 0.0;
  double l1 = 0.0;
  const double value = rule.integrate(integrand, 0.0, 1.0, 0.1 * tol, &err, &l1);
  if (err > tol * l1) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", err / l1);
    throw ToleranceNotMetError(std::string("weyl_integral_quadrature: relative error estimate ") +
                               buf + " exceeds tolerance");
  }
  const double prefactor = std::exp((nu + exponent) * std::log1p(-u) - ln_gamma(nu));
  return prefactor * value;
}

}  // namespace rosenmorse::oracles
