#include "rosenmorse/specfun.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "rosenmorse/errors.hpp"

namespace rosenmorse {

double ln_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("ln_gamma: argument must be finite and positive, got " +
                      std::to_string(x));
  }
  // boost::math::lgamma is reentrant, unlike the C library lgamma which
  // writes the global signgam.
  return boost::math::lgamma(x);
}

double gamma_ratio(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError("gamma_ratio: arguments must be positive");
  }
  if (x == y) return 1.0;
  return std::exp(ln_gamma(x) - ln_gamma(y));
}

double generalized_binomial(double alpha, int k) {
  if (!std::isfinite(alpha)) {
    throw DomainError("generalized_binomial: non-finite alpha");
  }
  if (k < 0) {
    throw DomainError("generalized_binomial: k must be non-negative");
  }
  double result = 1.0;
  for (int j = 0; j < k; ++j) {
    result *= (alpha - j) / (j + 1);
  }
  return result;
}

}  // namespace rosenmorse
