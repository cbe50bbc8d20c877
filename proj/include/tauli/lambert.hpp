#pragma once

// Real branches of the Lambert W function: solutions w of w*exp(w) = x.
//
// W0  : principal branch, defined for x >= -1/e, W0(x) >= -1.
// W-1 : lower branch, defined for -1/e <= x < 0, W-1(x) <= -1.
//
// Inputs within a couple of double ulps of -1/e are treated as the branch
// point itself (they arise from rounded expressions whose exact value is
// -1/e); anything further below, or otherwise outside the domain, throws
// std::domain_error.  Results satisfy |w*exp(w) - x| <= 1e-13 * max(1, |x|).

namespace tauli {

double lambert_w0(double x);
double lambert_wm1(double x);

// Extended-precision cores used by threshold computations, where downstream
// ceilings of values near 1e15 cannot afford double rounding.
long double lambert_w0l(long double x);
long double lambert_wm1l(long double x);

} // namespace tauli
