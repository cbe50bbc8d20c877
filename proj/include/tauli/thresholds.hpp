#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tauli/zero_model.hpp"

namespace tauli {

// Radius kept as (value, offset) with offset = R - 1 carried exactly.
// Thresholds scale like 1/log(R); at R = 1 + 1e-10 the double rounding of
// the value alone perturbs N by ~1e5, so every log goes through log1p of
// the offset.
struct Radius {
    double value = 1.0;
    long double offset = 0.0L;

    static Radius from_value(double r);
    static Radius from_offset(long double off);
    // Exact decimal parse: "1.0000000001" keeps the fractional part as a
    // scaled integer, so the offset is exact to one long-double ulp.
    // Other shapes (exponents, leading digits != 1) fall back to strtold.
    static Radius from_decimal_string(const std::string& s);

    long double log_radius() const;
};

enum class TheoremId { main1, main2, exp1 };

using Diagnostics = std::vector<std::pair<std::string, double>>;

// Unified result of the threshold computations.  main1/exp1 fill n and
// grid_max; main2 fills n0/n1/admissible.  diagnostics lists every element
// of the governing max/min by name.
struct ThresholdReport {
    TheoremId theorem = TheoremId::main1;
    long long n = 0;
    long long grid_max = 0;
    long long n0 = 0;
    long long n1 = 0;
    bool admissible = true;
    Diagnostics diagnostics;
};

struct DiagnosedValue {
    double value = 0.0;
    Diagnostics diagnostics;
};

// Rounding with an extended-precision guard: values within 1e-9 relative of
// an integer are snapped to it when they sit within ~64 long-double ulps,
// so table-scale expressions (~5e14) round deterministically.  Throws
// std::overflow_error outside the long long range.
long long ceil_hardened(long double x);
long long floor_hardened(long double x);

// Multiples of `step` in [step, bound], enumerable without materializing.
class MultipleGrid {
public:
    MultipleGrid(long long step, long long bound);
    long long step() const { return step_; }
    long long count() const { return bound_ / step_; }
    long long nth(long long i) const;  // 0-based
    long long first() const { return step_; }
    long long last() const { return count() * step_; }

    class iterator {
    public:
        iterator(long long step, long long i) : step_(step), i_(i) {}
        long long operator*() const { return step_ * i_; }
        iterator& operator++() { ++i_; return *this; }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }
    private:
        long long step_, i_;
    };
    iterator begin() const { return iterator(step_, 1); }
    iterator end() const { return iterator(step_, count() + 1); }

private:
    long long step_, bound_;
};

// Index threshold N and grid bound 5N^2(A_F log N + M_F) for the
// zero-region criterion; requires R > 1, tau > 1/e.
ThresholdReport theorem1_N(const ZeroCountModel& m, double tau, const Radius& r);

// The multiples of report.n in [n, grid_max]; requires a main1 report.
MultipleGrid theorem1_grid(const ThresholdReport& report);

// Smallest admissible truncation height (max of eight closed-form terms,
// each reported in the diagnostics).
DiagnosedValue theorem2_t_floor(const ZeroCountModel& m);

// Largest admissible R at height T: exp(4 W0(sqrt(K3/(4 e^2 N_T)))) with
// N_T the integer count estimate.  Requires T above the floor, K3 > 0 and
// N_T >= 1.
double theorem2_r_cap(const ZeroCountModel& m, double t_height, double tau);

// Closed-form [n0, n1] via the two Lambert branches.  admissible=false when
// the rounded interval is empty; the W argument must lie in [-1/e, 0) or a
// domain error ("W argument below -1/e") reports the inconsistent R.
ThresholdReport theorem2_interval(const ZeroCountModel& m, double t_height,
                                  double tau, const Radius& r);

// Direct scan of f(n) = K3 n(n-1) + N_count (1 - R^n) over n in [2, n_max]:
// n0 = 1 when f(2) >= 0 (n = 1 is unconditionally admissible), otherwise the
// first non-negative n; n1 ends the contiguous non-negative run.  Throws
// "no admissible n" when the scan finds none, and reports a second run as an
// error (the closed form predicts exactly one).
std::pair<long long, long long> interval_direct(double k3_value, long long n_count,
                                                const Radius& r, long long n_max);

// Index threshold N for the single-zero detector; grid is {N..5N}.
ThresholdReport theorem3_N(const ZeroCountModel& m, double tau, const Radius& r);

// (K1 + K4) n log n; n >= 3.
double detector_threshold(long long n, const ZeroCountModel& m, double tau);

}  // namespace tauli
