#pragma once

#include <complex>

#include "tauli/zero_model.hpp"

namespace tauli {

// Image of a zero under rho -> rho/(rho - tau).  The critical line
// Re(rho) = tau/2 maps onto the unit circle; zeros right of it map outside.
struct MobiusImage {
    double x = 0.0;  // Re of the image
    double y = 0.0;  // Im of the image
    double modulus = 0.0;
    double log_modulus = 0.0;
    double arg = 0.0;
};

// Throws std::domain_error on tau <= 0 and a singularity error when
// |rho - tau| < 1e-300.
MobiusImage mobius_map(std::complex<double> rho, double tau);

// One coefficient term 1 - (rho/(rho-tau))^n.  When |image|^n exceeds the
// double range the term is classified instead of evaluated: `overflow` is
// set, `value` carries a signed infinity on the real axis, and `re_sign` is
// the sign of the real part (the sign of -cos(n*arg)).
struct LiTerm {
    std::complex<double> value{0.0, 0.0};
    bool overflow = false;
    int re_sign = 0;
};

LiTerm li_term(std::complex<double> rho, long long n, double tau);

// Sum of li_term over the whole multiset.  Overflowing terms of one
// consistent real-part sign yield an infinite real part; conflicting signs
// throw std::overflow_error.
std::complex<double> li_partial(const ZeroSet& zeros, long long n);
double re_li_partial(const ZeroSet& zeros, long long n);

// Real part of the sum restricted to the window t_lo < |Im rho| <= t_hi.
// Adjacent windows add exactly: tail_sum(a,b) + tail_sum(b,c) =
// tail_sum(a,c), and the full window (t_lo < 0) recovers re_li_partial.
double tail_sum(const ZeroSet& zeros, long long n, double t_lo, double t_hi);

// Sum over the multiset of |1 - (rho/(rho-tau))^n| restricted to
// |Im rho| > t_lo; the magnitude the tail estimates bound.
double tail_abs_sum(const ZeroSet& zeros, long long n, double t_lo);

// n = 1 in closed form: sum of tau*(tau - Re rho)/|rho - tau|^2, each term
// non-negative on the strip.
double lambda1_closed_form(const ZeroSet& zeros);

}  // namespace tauli
