#pragma once

#include "tauli/zero_model.hpp"

namespace tauli {

// Aggregate constants derived from a zero-count model at fixed tau.
// All operations require tau > 1/e (the formulas' logarithms degenerate at
// or below that point) and throw std::domain_error otherwise.

// M_F = B_F + C1/e + C2/3 + C3/9 (symmetric constants).
double m_f(const ZeroCountModel& m);

// Tail-sum constant: (2tau/3)(e + 1/e)(A_F + |A_F log(8 e tau) + B_F|)
//   + (4/27)(1 + e^-2)((c1/3) log 2 + c1 log(e^2 tau) + c2 + 2 c3/(7 e tau))
// with the dyadic window constants.
double k1(const ZeroCountModel& m, double tau);

// Small-zero aggregate; grows like exp(5 tau^2 M_F / 2) and may saturate to
// +inf in double — detail::log_k2l is the always-finite form.
double k2(const ZeroCountModel& m, double tau);

// Curvature coefficient of the n(n-1) term at truncation height T >= T0:
// (0.432 tau^2 / T)((A_F/2) log(2T) + (A_F log 4 + B_F)/2
//   - (c1/(3T)) log(2^{1/3} T) - c2/(3T) - 2 c3/(7 T^2))
// with the dyadic window constants.
double k3(const ZeroCountModel& m, double t_height, double tau);

// Detector constant: 2(A_F e tau log(e^2 tau) + |B_F| e tau
//   + (C1 log(e^2 tau) + C2)/3 + C3/(9 e tau)) with symmetric constants.
double k4(const ZeroCountModel& m, double tau);

// Smallest T >= T0 with k3 > 0, by bisection after an exponential search;
// k3 is eventually positive because the leading log term dominates.
double k3_positive_threshold(const ZeroCountModel& m, double tau);

struct ConstantBundle {
    double m_f = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;  // +inf when the double range is exceeded
    double k4 = 0.0;
    ZeroCountModel model;
    double tau = 0.0;
    double k3(double t_height) const;  // materialized on demand
};

ConstantBundle constant_bundle(const ZeroCountModel& m, double tau);

namespace detail {
// Extended-precision cores used by the threshold computations, where the
// final ceilings sit close enough to integers that double rounding could
// flip a tabled value.
long double m_fl(const ZeroCountModel& m);
long double k1l(const ZeroCountModel& m, long double tau);
long double log_k2l(const ZeroCountModel& m, long double tau);  // log K2, finite
long double k3l(const ZeroCountModel& m, long double t_height, long double tau);
long double k4l(const ZeroCountModel& m, long double tau);
}  // namespace detail

}  // namespace tauli
