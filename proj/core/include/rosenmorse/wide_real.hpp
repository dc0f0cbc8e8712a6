#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace rosenmorse {

// 113-bit significand. Shifted-basis Jacobi coefficients alternate in sign and
// grow like (2 + sqrt 3)^n; summing them for v near -1 cancels ~14 digits at
// n = 20, so coefficients are carried and summed in this type.
using WideReal = boost::multiprecision::cpp_bin_float_quad;

}  // namespace rosenmorse
