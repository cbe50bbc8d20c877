#include "tauli/explicit_constants.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <stdexcept>

namespace tauli {

namespace {

constexpr long double kE = 2.71828182845904523536028747135266250L;

// Strictly above the double rounding of 1/e: the formulas degenerate at the
// point itself, and a tau written as exp(-1.0) must be rejected.
constexpr double kInvE = 0.36787944117144232159552377016146;

void require_tau(double tau) {
    if (!(tau > kInvE)) throw std::domain_error("constants require tau > 1/e");
}

long double logaddexp(long double a, long double b) {
    if (a == -std::numeric_limits<long double>::infinity()) return b;
    if (b == -std::numeric_limits<long double>::infinity()) return a;
    const long double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

namespace detail {

long double m_fl(const ZeroCountModel& m) {
    return static_cast<long double>(m.b_f) + m.c1 / kE + m.c2 / 3.0L + m.c3 / 9.0L;
}

long double k1l(const ZeroCountModel& m, long double tau) {
    const long double a = m.a_f, b = m.b_f;
    const long double front =
        (2.0L * tau / 3.0L) * (kE + 1.0L / kE) *
        (a + std::fabs(a * std::log(8.0L * kE * tau) + b));
    const long double tail =
        (4.0L / 27.0L) * (1.0L + std::exp(-2.0L)) *
        ((m.d1 / 3.0L) * std::log(2.0L) + m.d1 * std::log(kE * kE * tau) + m.d2 +
         2.0L * m.d3 / (7.0L * kE * tau));
    return front + tail;
}

long double log_k2l(const ZeroCountModel& m, long double tau) {
    const long double a = m.a_f;
    const long double mf = std::fabs(m_fl(m));
    const long double front = 5.0L * (a + mf) *
                              (2.5L + std::log(5.0L * kE * tau) +
                               std::fabs(std::log(a + mf / 1.732L)));
    const long double l3 = std::log(3.0L * kE * tau);
    const long double inner = a + std::fabs((long double)m.b_f) / l3 +
                              m.c1 / (3.0L * kE * tau) +
                              m.c2 / (3.0L * kE * tau * l3) +
                              m.c3 / (9.0L * (kE * tau) * (kE * tau) * l3);
    const long double expo = (5.0L * tau * tau * m_fl(m) + 2.0L) / 2.0L;
    // log(2 tau e^expo inner + K1), kept in log space so huge exponents stay
    // representable.
    const long double k1v = k1l(m, tau);
    long double log_big = expo + std::log(2.0L * tau * inner);
    if (k1v > 0.0L) log_big = logaddexp(log_big, std::log(k1v));
    return std::log(front) + log_big;
}

long double k3l(const ZeroCountModel& m, long double t, long double tau) {
    const long double a = m.a_f, b = m.b_f;
    const long double bracket =
        (a / 2.0L) * std::log(2.0L * t) + (a * std::log(4.0L) + b) / 2.0L -
        (m.d1 / (3.0L * t)) * std::log(std::cbrt(2.0L) * t) - m.d2 / (3.0L * t) -
        2.0L * m.d3 / (7.0L * t * t);
    return (0.432L * tau * tau / t) * bracket;
}

long double k4l(const ZeroCountModel& m, long double tau) {
    const long double a = m.a_f;
    const long double le2t = std::log(kE * kE * tau);
    return 2.0L * (a * kE * tau * le2t + std::fabs((long double)m.b_f) * kE * tau +
                   (m.c1 * le2t + m.c2) / 3.0L + m.c3 / (9.0L * kE * tau));
}

}  // namespace detail

double m_f(const ZeroCountModel& m) {
    m.validate();
    return static_cast<double>(detail::m_fl(m));
}

double k1(const ZeroCountModel& m, double tau) {
    m.validate();
    require_tau(tau);
    return static_cast<double>(detail::k1l(m, tau));
}

double k2(const ZeroCountModel& m, double tau) {
    m.validate();
    require_tau(tau);
    const long double lg = detail::log_k2l(m, tau);
    return static_cast<double>(std::exp(lg));
}

double k3(const ZeroCountModel& m, double t_height, double tau) {
    m.validate();
    require_tau(tau);
    if (!(t_height >= m.t0)) throw std::domain_error("k3 requires T >= T0");
    return static_cast<double>(detail::k3l(m, t_height, tau));
}

double k4(const ZeroCountModel& m, double tau) {
    m.validate();
    require_tau(tau);
    return static_cast<double>(detail::k4l(m, tau));
}

double k3_positive_threshold(const ZeroCountModel& m, double tau) {
    m.validate();
    require_tau(tau);
    long double lo = m.t0;
    if (detail::k3l(m, lo, tau) > 0.0L) return static_cast<double>(lo);
    long double hi = lo;
    do {
        hi *= 2.0L;
        if (hi > 1e15L)
            throw std::runtime_error("k3 does not become positive below 1e15");
    } while (!(detail::k3l(m, hi, tau) > 0.0L));
    for (int i = 0; i < 200 && hi - lo > 1e-13L * hi; ++i) {
        const long double mid = 0.5L * (lo + hi);
        if (detail::k3l(m, mid, tau) > 0.0L)
            hi = mid;
        else
            lo = mid;
    }
    return static_cast<double>(hi);
}

double ConstantBundle::k3(double t_height) const {
    return tauli::k3(model, t_height, tau);
}

ConstantBundle constant_bundle(const ZeroCountModel& m, double tau) {
    ConstantBundle b;
    b.m_f = m_f(m);
    b.k1 = k1(m, tau);
    b.k2 = k2(m, tau);
    b.k4 = k4(m, tau);
    b.model = m;
    b.tau = tau;
    return b;
}

}  // namespace tauli
