#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "tauli/thresholds.hpp"

namespace tauli {

// The locus |rho/(rho - tau)| = R is a circle on the real axis (an
// Apollonius circle of the points 0 and tau); the zero region
// |rho/(rho - tau)| >= R is its closed disk clipped to the strip
// 0 <= Re <= tau.
struct RegionCircle {
    double tau = 0.0;
    double r = 1.0;
    double center = 0.0;             // tau R^2/(R^2 - 1)
    double radius = 0.0;             // tau R/(R^2 - 1)
    double strip_height_bound = 0.0; // tau/sqrt(R^2 - 1): where the strip clips
    double strip_re_min = 0.0;       // R tau/(1 + R): leftmost point of the disk
};

// Throws std::domain_error on R <= 1 or tau <= 0.  The construction
// cross-checks center - radius == strip_re_min and the membership
// equivalence on a deterministic probe set.
RegionCircle region(double tau, const Radius& r);

enum class RegionClass { inside_region, outside_region, on_boundary };

// Compares |rho/(rho - tau)| against R with a 1e-10 relative boundary band.
// inside_region means the modulus exceeds R (the zero lies in the disk).
RegionClass classify(std::complex<double> rho, double tau, const Radius& r);

// `samples` points on the boundary arc inside the strip, uniform in the
// circle's angular parameter from (tau, +height) through (strip_re_min, 0)
// to (tau, -height).  The three distinguished points are emitted exactly
// (the axis point only when samples >= 3).  samples >= 2 required.
std::vector<std::pair<double, double>> boundary_curve(double tau, const Radius& r,
                                                      long long samples);

// Classical comparison curves: sigma(t) bounds of explicit zero-free regions
// for Dirichlet L-functions.
double mccurley_sigma(long long q, double t);           // q >= 3
double kadiri_sigma(long long q, double t);             // 3 <= q <= 400000

}  // namespace tauli
