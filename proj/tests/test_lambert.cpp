#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tauli/lambert.hpp"

namespace {

constexpr double kInvE = 0.36787944117144232159552377016146;

struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

double residual(double w, double x) {
    return std::fabs(w * std::exp(w) - x);
}

}  // namespace

TEST_CASE("principal branch reference values") {
    CHECK(tauli::lambert_w0(0.0) == 0.0);
    // Independently computed by bisection on w e^w = x at 60-digit precision.
    CHECK(tauli::lambert_w0(1.0) ==
          doctest::Approx(0.5671432904097838729999687).epsilon(1e-14));
    CHECK(tauli::lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tauli::lambert_w0(2.0 * std::exp(2.0)) ==
          doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("lower branch reference values") {
    CHECK(tauli::lambert_wm1(-0.1) ==
          doctest::Approx(-3.577152063957297218409392).epsilon(1e-14));
    CHECK(tauli::lambert_wm1(-0.2) ==
          doctest::Approx(-2.542641357773526424293806).epsilon(1e-14));
    CHECK(tauli::lambert_wm1(-2.0 * std::exp(-2.0)) ==
          doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("branch point maps to -1 on both branches") {
    const double x = -kInvE;  // nearest double to the real branch point
    CHECK(std::fabs(tauli::lambert_w0(x) - (-1.0)) <= 1e-12);
    CHECK(std::fabs(tauli::lambert_wm1(x) - (-1.0)) <= 1e-12);
    // One double ulp below is still treated as the branch point.
    const double below = std::nextafter(x, -1.0);
    CHECK(std::fabs(tauli::lambert_w0(below) - (-1.0)) <= 1e-12);
    CHECK(std::fabs(tauli::lambert_wm1(below) - (-1.0)) <= 1e-12);
}

TEST_CASE("domain errors outside the branch domains") {
    CHECK_THROWS_AS((void)tauli::lambert_w0(-0.4), std::domain_error);
    CHECK_THROWS_AS((void)tauli::lambert_w0(-kInvE - 1e-12), std::domain_error);
    CHECK_THROWS_AS((void)tauli::lambert_wm1(0.0), std::domain_error);
    CHECK_THROWS_AS((void)tauli::lambert_wm1(0.5), std::domain_error);
    CHECK_THROWS_AS((void)tauli::lambert_wm1(-0.4), std::domain_error);
}

TEST_CASE("residuals over 1e4 random points per branch") {
    SplitMix rng(0x5eedULL);
    for (int i = 0; i < 10000; ++i) {
        // Mix of scales: near the branch point, moderate, and large.
        const int bucket = static_cast<int>(rng.next() % 3);
        double x;
        if (bucket == 0) {
            x = -kInvE + rng.uniform01() * kInvE;  // (-1/e, 0)
        } else if (bucket == 1) {
            x = rng.uniform01() * 10.0;
        } else {
            x = std::exp(rng.uniform01() * 25.0);  // up to ~7e10
        }
        const double w = tauli::lambert_w0(x);
        CHECK(w >= -1.0);
        CHECK(residual(w, x) <= 1e-13 * std::max(1.0, std::fabs(x)));
    }
    for (int i = 0; i < 10000; ++i) {
        // Log-uniform magnitudes from the branch point down to 1e-18.
        const double mag = std::exp(-rng.uniform01() * 40.0);
        const double x = -kInvE * std::max(mag, 1e-18);
        const double w = tauli::lambert_wm1(x);
        CHECK(w <= -1.0);
        CHECK(residual(w, x) <= 1e-13 * std::max(1.0, std::fabs(x)));
    }
}

TEST_CASE("stress points adjacent to the branch point") {
    for (int k = 15; k >= 3; --k) {
        const double delta = std::pow(10.0, -k);
        const double x = -kInvE + delta;
        const double w0 = tauli::lambert_w0(x);
        const double wm1 = tauli::lambert_wm1(x);
        CHECK(residual(w0, x) <= 1e-13);
        CHECK(residual(wm1, x) <= 1e-13);
        CHECK(w0 >= -1.0);
        CHECK(wm1 <= -1.0);
    }
}

TEST_CASE("absolute accuracy near zero on the principal branch") {
    for (double x : {1e-20, -1e-20, 1e-300, 4e-308, 1e-15, -1e-15}) {
        const double w = tauli::lambert_w0(x);
        CHECK(residual(w, x) <= 1e-15);
        // W0(x) = x - x^2 + ... so the value itself is x to first order.
        CHECK(std::fabs(w - x) <= 1e-15);
    }
}

TEST_CASE("monotonicity on sorted samples") {
    SplitMix rng(0xabcdULL);
    std::vector<double> xs;
    for (int i = 0; i < 2000; ++i)
        xs.push_back(-kInvE + 1e-6 + rng.uniform01() * 50.0);
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] - xs[i - 1] < 1e-9) continue;  // avoid double-rounding ties
        CHECK(tauli::lambert_w0(xs[i]) > tauli::lambert_w0(xs[i - 1]));
    }
    xs.clear();
    for (int i = 0; i < 2000; ++i)
        xs.push_back(-kInvE * (1e-6 + (1.0 - 2e-6) * rng.uniform01()));
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] - xs[i - 1] < 1e-12) continue;
        CHECK(tauli::lambert_wm1(xs[i]) < tauli::lambert_wm1(xs[i - 1]));
    }
}

TEST_CASE("branch ordering between the two real branches") {
    SplitMix rng(0x17ULL);
    for (int i = 0; i < 200; ++i) {
        const double x = -kInvE * (1e-6 + (1.0 - 2e-6) * rng.uniform01());
        const double w0 = tauli::lambert_w0(x);
        const double wm1 = tauli::lambert_wm1(x);
        CHECK(wm1 < -1.0);
        CHECK(w0 > -1.0);
        CHECK(w0 <= 0.0);
    }
}

TEST_CASE("extended-precision cores agree with the double wrappers") {
    for (double x : {-0.3, -0.1, -0.01, 0.5, 3.0, 1e4}) {
        if (x < 0.0) {
            CHECK(static_cast<double>(tauli::lambert_wm1l(x)) ==
                  doctest::Approx(tauli::lambert_wm1(x)).epsilon(1e-15));
        }
        CHECK(static_cast<double>(tauli::lambert_w0l(x)) ==
              doctest::Approx(tauli::lambert_w0(x)).epsilon(1e-15));
    }
}
