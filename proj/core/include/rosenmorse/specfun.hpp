#pragma once

namespace rosenmorse {

/// ln Gamma(x) for finite x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// Gamma(x) / Gamma(y), evaluated as exp(ln_gamma(x) - ln_gamma(y)) so that
/// large arguments do not overflow.
double gamma_ratio(double x, double y);

/// alpha (alpha - 1) ... (alpha - k + 1) / k! by direct product. Works for any
/// real alpha, including negative integers where the Gamma form has poles.
double generalized_binomial(double alpha, int k);

}  // namespace rosenmorse
