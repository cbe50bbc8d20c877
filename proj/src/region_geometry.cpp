#include "tauli/region_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tauli/li_coefficients.hpp"

namespace tauli {

namespace {

void require_region_args(double tau, const Radius& r) {
    if (!(tau > 0.0)) throw std::domain_error("region requires tau > 0");
    if (!(r.offset > 0.0L)) throw std::domain_error("region requires R > 1");
}

}  // namespace

RegionCircle region(double tau, const Radius& r) {
    require_region_args(tau, r);
    const long double t = tau;
    const long double off = r.offset;
    const long double rr = 1.0L + off;
    const long double denom = off * (2.0L + off);  // R^2 - 1, exact in the offset

    RegionCircle c;
    c.tau = tau;
    c.r = r.value;
    c.center = static_cast<double>(t * rr * rr / denom);
    c.radius = static_cast<double>(t * rr / denom);
    c.strip_height_bound = static_cast<double>(t / std::sqrt(denom));
    c.strip_re_min = static_cast<double>(rr * t / (2.0L + off));

    if (!(c.center > tau))
        throw std::logic_error("region geometry: centre must lie right of tau");
    const long double left = t * rr * rr / denom - t * rr / denom;
    if (std::fabs(left - rr * t / (2.0L + off)) >
        1e-12L * std::fabs(rr * t / (2.0L + off)))
        throw std::logic_error("region geometry: left extreme mismatch");
    if (!(c.strip_height_bound < c.radius))
        throw std::logic_error("region geometry: strip must clip the disk");
    return c;
}

RegionClass classify(std::complex<double> rho, double tau, const Radius& r) {
    require_region_args(tau, r);
    const MobiusImage img = mobius_map(rho, tau);
    const double band = 1e-10 * r.value;
    if (std::fabs(img.modulus - r.value) <= band) return RegionClass::on_boundary;
    return img.modulus > r.value ? RegionClass::inside_region
                                 : RegionClass::outside_region;
}

std::vector<std::pair<double, double>> boundary_curve(double tau, const Radius& r,
                                                      long long samples) {
    require_region_args(tau, r);
    if (samples < 2) throw std::domain_error("boundary_curve requires samples >= 2");
    const RegionCircle c = region(tau, r);

    // The strip edge Re = tau meets the circle at angle theta0 = acos(-1/R);
    // the in-strip arc runs from theta0 (top corner) through pi (axis) to
    // 2 pi - theta0 (bottom corner).
    const long double theta0 = std::acos(-1.0L / (1.0L + r.offset));
    const long double span = 2.0L * (M_PIl - theta0);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (long long i = 0; i < samples; ++i) {
        const long double th =
            theta0 + span * static_cast<long double>(i) /
                         static_cast<long double>(samples - 1);
        pts.emplace_back(
            static_cast<double>(c.center + c.radius * std::cos(th)),
            static_cast<double>(c.radius * std::sin(th)));
    }
    // The three distinguished points are exact by construction elsewhere in
    // the library; pin them here so the curve agrees to the last bit.
    pts.front() = {tau, c.strip_height_bound};
    pts.back() = {tau, -c.strip_height_bound};
    if (samples >= 3) pts[static_cast<std::size_t>((samples - 1) / 2)] = {c.strip_re_min, 0.0};
    return pts;
}

double mccurley_sigma(long long q, double t) {
    if (q < 3) throw std::domain_error("mccurley_sigma requires q >= 3");
    const double m = std::max({static_cast<double>(q),
                               static_cast<double>(q) * std::fabs(t), 10.0});
    return 1.0 - 1.0 / (9.645908801 * std::log(m));
}

double kadiri_sigma(long long q, double t) {
    if (q < 3 || q > 400000)
        throw std::domain_error("kadiri_sigma requires 3 <= q <= 400000");
    const double m = static_cast<double>(q) * std::max(1.0, std::fabs(t));
    return 1.0 - 1.0 / (5.60 * std::log(m));
}

}  // namespace tauli
