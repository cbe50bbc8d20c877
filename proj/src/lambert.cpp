#include "tauli/lambert.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tauli {

namespace {

const long double kInvE = 0.36787944117144232159552377016146L; // 1/e
// Slack around -1/e absorbed into the branch point: two double ulps at 0.368.
// The snap is two-sided because the double nearest -1/e may land on either
// side of the real branch point; both W branches pass through -1 there.
const long double kBranchSlack = 1.2e-16L;

// One Halley step for f(w) = w e^w - x.
long double halley_step(long double w, long double x) {
    long double ew = std::exp(w);
    long double f = w * ew - x;
    long double d = ew * (w + 1) - (w + 2) * f / (2 * w + 2);
    return w - f / d;
}

long double refine(long double w, long double x) {
    for (int i = 0; i < 60; ++i) {
        long double next = halley_step(w, x);
        if (!std::isfinite(next)) break;
        long double dw = std::fabs(next - w);
        w = next;
        if (dw <= 4 * std::numeric_limits<long double>::epsilon() * (1 + std::fabs(w))) break;
    }
    return w;
}

// Series around the branch point w = -1, p = +-sqrt(2(e x + 1)).
long double branch_series(long double p) {
    return -1 + p * (1 + p * (-1.0L / 3 + p * (11.0L / 72)));
}

[[noreturn]] void domain_fail(const char* branch, long double x) {
    throw std::domain_error(std::string("lambert ") + branch + ": argument " +
                            std::to_string(static_cast<double>(x)) + " outside domain");
}

} // namespace

long double lambert_w0l(long double x) {
    if (!std::isfinite(static_cast<double>(x))) domain_fail("W0", x);
    if (std::fabs(x + kInvE) <= kBranchSlack) return -1.0L;
    if (x < -kInvE) domain_fail("W0", x);
    if (x == 0) return 0.0L;

    long double w;
    if (x < -kInvE + 0.04L) {
        long double p = std::sqrt(2 * (std::exp(1.0L) * x + 1));
        w = branch_series(p);
    } else if (x < 4) {
        // Pade-free start: one log-free fixed point is enough for Halley.
        w = x / (1 + x);
    } else {
        long double l1 = std::log(x);
        long double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }
    return refine(w, x);
}

long double lambert_wm1l(long double x) {
    if (!std::isfinite(static_cast<double>(x))) domain_fail("W-1", x);
    if (x >= 0) domain_fail("W-1", x);
    if (std::fabs(x + kInvE) <= kBranchSlack) return -1.0L;
    if (x < -kInvE) domain_fail("W-1", x);

    long double w;
    if (x < -kInvE + 0.04L) {
        long double p = std::sqrt(2 * (std::exp(1.0L) * x + 1));
        w = branch_series(-p);
    } else {
        long double l1 = std::log(-x);
        long double l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    }
    return refine(w, x);
}

namespace {

double check_residual(long double w, long double x, const char* branch) {
    long double resid = std::fabs(w * std::exp(w) - x);
    if (resid > 1e-13L * std::max<long double>(1, std::fabs(x)))
        throw std::runtime_error(std::string("lambert ") + branch + ": failed to converge");
    return static_cast<double>(w);
}

} // namespace

double lambert_w0(double x) {
    long double w = lambert_w0l(x);
    return check_residual(w, x, "W0");
}

double lambert_wm1(double x) {
    long double w = lambert_wm1l(x);
    return check_residual(w, x, "W-1");
}

} // namespace tauli
