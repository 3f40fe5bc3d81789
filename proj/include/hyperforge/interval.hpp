#pragma once

#include "hyperforge/precision.hpp"

namespace hyperforge {

// Arithmetic on AppValue that propagates the error bounds first-order-safely
// and adds the rounding of the operation itself.

AppValue av_add(const AppValue& a, const AppValue& b);
AppValue av_sub(const AppValue& a, const AppValue& b);
AppValue av_mul(const AppValue& a, const AppValue& b);
AppValue av_div(const AppValue& a, const AppValue& b);
AppValue av_scale(const AppValue& a, const Complex& c);
AppValue av_scale(const AppValue& a, const Real& c);
AppValue av_pow(const AppValue& a, long n);
AppValue av_neg(const AppValue& a);
// Exact constant with rounding error only.
AppValue av_exact(const Complex& v);
AppValue av_exact(const Real& v);
// Real part; the error bound carries over.
AppValue av_re(const AppValue& a);

long double magnitude(const Complex& z);

}  // namespace hyperforge
