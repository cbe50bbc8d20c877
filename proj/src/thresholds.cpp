#include "tauli/thresholds.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

#include "tauli/explicit_constants.hpp"
#include "tauli/lambert.hpp"

namespace tauli {

namespace {

constexpr long double kE = 2.71828182845904523536028747135266250L;
constexpr long double kInvE = 0.36787944117144232159552377016146087L;

void require_r(const Radius& r) {
    if (!(r.offset > 0.0L) || !std::isfinite(r.value))
        throw std::domain_error("radius must satisfy R > 1");
}

void require_tau(double tau) {
    if (!(tau > 1.0 / kE)) throw std::domain_error("thresholds require tau > 1/e");
}

long long checked_ll(long double v) {
    if (!(v >= -9.2e18L && v <= 9.2e18L))
        throw std::overflow_error("threshold exceeds the 64-bit integer range");
    return static_cast<long long>(v);
}

void push(Diagnostics& d, const char* name, long double v) {
    d.emplace_back(name, static_cast<double>(v));
}

}  // namespace

Radius Radius::from_value(double r) {
    Radius out;
    out.value = r;
    out.offset = static_cast<long double>(r) - 1.0L;
    return out;
}

Radius Radius::from_offset(long double off) {
    Radius out;
    out.offset = off;
    out.value = static_cast<double>(1.0L + off);
    return out;
}

Radius Radius::from_decimal_string(const std::string& s) {
    const auto bad = [&]() {
        return std::domain_error("unparseable radius '" + s + "'");
    };
    if (s.empty()) throw bad();
    // Exact path for "1.ddd…" (no exponent), the regime where offset
    // precision matters.
    if (s.size() >= 2 && s[0] == '1' && s[1] == '.' &&
        s.find_first_of("eE") == std::string::npos) {
        const std::string frac = s.substr(2);
        if (!frac.empty() && frac.size() <= 18 &&
            frac.find_first_not_of("0123456789") == std::string::npos) {
            std::uint64_t num = 0;
            for (char c : frac) num = num * 10 + static_cast<std::uint64_t>(c - '0');
            const long double off =
                static_cast<long double>(num) /
                std::pow(10.0L, static_cast<long double>(frac.size()));
            return from_offset(off);
        }
    }
    char* end = nullptr;
    const long double v = std::strtold(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || !std::isfinite((double)v)) throw bad();
    Radius out;
    out.value = static_cast<double>(v);
    out.offset = v - 1.0L;
    return out;
}

long double Radius::log_radius() const { return std::log1p(offset); }

namespace {

// Snap-to-integer band: ~64 ulps of the long double value.
bool snap(long double x, long double& snapped) {
    const long double r = std::floor(x + 0.5L);
    const long double tol = 64.0L * LDBL_EPSILON * std::max(1.0L, std::fabs(x));
    if (std::fabs(x - r) <= tol) {
        snapped = r;
        return true;
    }
    return false;
}

}  // namespace

long long ceil_hardened(long double x) {
    long double s;
    if (snap(x, s)) return checked_ll(s);
    return checked_ll(std::ceil(x));
}

long long floor_hardened(long double x) {
    long double s;
    if (snap(x, s)) return checked_ll(s);
    return checked_ll(std::floor(x));
}

MultipleGrid::MultipleGrid(long long step, long long bound) : step_(step), bound_(bound) {
    if (step <= 0 || bound < step)
        throw std::invalid_argument("grid requires 0 < step <= bound");
}

long long MultipleGrid::nth(long long i) const {
    if (i < 0 || i >= count()) throw std::out_of_range("grid index out of range");
    return (i + 1) * step_;
}

ThresholdReport theorem1_N(const ZeroCountModel& m, double tau, const Radius& r) {
    m.validate();
    require_tau(tau);
    require_r(r);
    const long double a = m.a_f;
    const long double mf = detail::m_fl(m);
    const long double lt = tau;
    const long double logr = r.log_radius();

    ThresholdReport rep;
    rep.theorem = TheoremId::main1;

    // R^2 - 1 = offset (2 + offset), exact in the offset representation.
    const long double geom = lt / std::sqrt(r.offset * (2.0L + r.offset));
    const long double mf_term = std::exp((1.0L - 15.0L * mf) / (15.0L * a));
    const long double k2_term =
        12.0L * (std::log(20.0L) + detail::log_k2l(m, lt)) / logr;

    const long double branch_cut = 3.0L * (5.0L * lt * lt * a + 4.0L) / (4.0L * kE);
    long double best = std::max({geom, (long double)m.t0, mf_term, k2_term});
    push(rep.diagnostics, "geometry", geom);
    push(rep.diagnostics, "T0", m.t0);
    push(rep.diagnostics, "M-term", mf_term);
    if (logr <= branch_cut) {
        long double w_term;
        try {
            const long double w_arg = -4.0L * logr / (3.0L * (5.0L * lt * lt * a + 4.0L));
            w_term = std::exp(-lambert_wm1l(w_arg));
        } catch (const std::domain_error&) {
            throw std::domain_error("branch condition violated");
        }
        best = std::max(best, w_term);
        push(rep.diagnostics, "W-term", w_term);
    } else {
        best = std::max(best, kE);
        push(rep.diagnostics, "e", kE);
    }
    push(rep.diagnostics, "K2-term", k2_term);

    rep.n = ceil_hardened(best);
    const long double nn = static_cast<long double>(rep.n);
    rep.grid_max = floor_hardened(5.0L * nn * nn * (a * std::log(nn) + mf));
    push(rep.diagnostics, "N-raw", best);
    return rep;
}

MultipleGrid theorem1_grid(const ThresholdReport& report) {
    if (report.theorem != TheoremId::main1)
        throw std::invalid_argument("grid enumeration expects a main1 report");
    return MultipleGrid(report.n, report.grid_max);
}

DiagnosedValue theorem2_t_floor(const ZeroCountModel& m) {
    m.validate();
    const long double a = m.a_f, b = m.b_f;
    DiagnosedValue out;
    const long double t1 = m.t0;
    const long double t2 = std::exp(-96.0L * b / (23.0L * a));
    const long double t3 = std::exp(0.324L * b / ((kE * kE - 1.296L) * a));
    const long double t4 = 8.0L * m.d1 / (3.0L * a);
    long double t5 = 0.0L;
    if (m.d2 > 0.0) {
        const long double x = 16.0L * m.d2 / (3.0L * a);
        t5 = (x / 2.0L) / lambert_w0l(x);
    }
    const long double t6 = 96.0L * m.c1 / (23.0L * a);
    long double t7 = 0.0L;
    if (m.c2 > 0.0) {
        const long double x = 96.0L * m.c2 / (23.0L * a);
        t7 = x / lambert_w0l(x);
    }
    long double t8 = 0.0L;
    if (m.c3 > 0.0) {
        const long double x = 192.0L * m.c3 / (23.0L * a);
        t8 = std::sqrt(x / lambert_w0l(x));
    }
    push(out.diagnostics, "T0", t1);
    push(out.diagnostics, "exp(-96B/(23A))", t2);
    push(out.diagnostics, "exp(0.324B/((e^2-1.296)A))", t3);
    push(out.diagnostics, "8c1/(3A)", t4);
    push(out.diagnostics, "W0(c2)", t5);
    push(out.diagnostics, "96C1/(23A)", t6);
    push(out.diagnostics, "W0(C2)", t7);
    push(out.diagnostics, "sqrt-W0(C3)", t8);
    out.value = static_cast<double>(std::max({t1, t2, t3, t4, t5, t6, t7, t8}));
    return out;
}

namespace {

struct Main2Core {
    long double k3 = 0.0L;
    long double count = 0.0L;
};

Main2Core main2_core(const ZeroCountModel& m, double t_height, double tau) {
    const double floor_t = theorem2_t_floor(m).value;
    if (!(t_height > floor_t))
        throw std::domain_error("T below the admissibility floor");
    Main2Core core;
    core.k3 = detail::k3l(m, t_height, tau);
    if (!(core.k3 > 0.0L)) throw std::domain_error("K3 not positive at T");
    const long long n_t = count_estimate_integer(m, t_height);
    if (n_t < 1) throw std::domain_error("zero count estimate is 0");
    core.count = static_cast<long double>(n_t);
    return core;
}

}  // namespace

double theorem2_r_cap(const ZeroCountModel& m, double t_height, double tau) {
    m.validate();
    require_tau(tau);
    const Main2Core core = main2_core(m, t_height, tau);
    const long double arg = std::sqrt(core.k3 / (4.0L * kE * kE * core.count));
    return static_cast<double>(std::exp(4.0L * lambert_w0l(arg)));
}

ThresholdReport theorem2_interval(const ZeroCountModel& m, double t_height,
                                  double tau, const Radius& r) {
    m.validate();
    require_tau(tau);
    require_r(r);
    const Main2Core core = main2_core(m, t_height, tau);
    const long double logr = r.log_radius();

    long double w_arg = -(logr / 2.0L) * std::sqrt(core.count / core.k3) *
                        std::exp(logr / 4.0L);
    // A hair below the branch point is rounding noise; materially below it
    // means R exceeds the admissible cap.
    if (w_arg < -kInvE) {
        if (w_arg < -kInvE * (1.0L + 1e-15L))
            throw std::domain_error("W argument below -1/e (R exceeds the admissible cap)");
        w_arg = -kInvE;
    }

    ThresholdReport rep;
    rep.theorem = TheoremId::main2;
    const long double n0_raw = 0.5L - (2.0L / logr) * lambert_w0l(w_arg);
    const long double n1_raw = 0.5L - (2.0L / logr) * lambert_wm1l(w_arg);
    const long long n_max = floor_hardened(static_cast<long double>(t_height) /
                                           (kE * static_cast<long double>(tau)));
    rep.n0 = std::max(1LL, ceil_hardened(n0_raw));
    rep.n1 = std::min(n_max, floor_hardened(n1_raw));
    rep.admissible = rep.n0 <= rep.n1 && rep.n1 >= 1;
    push(rep.diagnostics, "W-argument", w_arg);
    push(rep.diagnostics, "n0-raw", n0_raw);
    push(rep.diagnostics, "n1-raw", n1_raw);
    push(rep.diagnostics, "n-max", n_max);
    push(rep.diagnostics, "K3", core.k3);
    push(rep.diagnostics, "count", core.count);
    return rep;
}

std::pair<long long, long long> interval_direct(double k3_value, long long n_count,
                                                const Radius& r, long long n_max) {
    if (!(k3_value > 0.0)) throw std::domain_error("direct scan requires K3 > 0");
    if (n_count < 1) throw std::domain_error("direct scan requires a positive zero count");
    require_r(r);
    if (n_max < 2) throw std::domain_error("direct scan requires n_max >= 2");

    const long double logr = r.log_radius();
    const long double cnt = static_cast<long double>(n_count);
    const long double k3l = k3_value;
    auto f = [&](long long n) -> long double {
        const long double nl = static_cast<long double>(n);
        // count * (1 - R^n) = -count * expm1(n log R), exact near R = 1.
        return k3l * nl * (nl - 1.0L) - cnt * std::expm1(nl * logr);
    };

    long long first = 0;
    for (long long n = 2; n <= n_max; ++n) {
        if (f(n) >= 0.0L) {
            first = n;
            break;
        }
    }
    if (first == 0) throw std::runtime_error("no admissible n");

    long long last = first;
    while (last + 1 <= n_max && f(last + 1) >= 0.0L) ++last;
    for (long long n = last + 2; n <= n_max; ++n)
        if (f(n) >= 0.0L)
            throw std::runtime_error(
                "direct scan found a second admissible run; expected one contiguous run");

    const long long n0 = (first == 2 && f(2) >= 0.0L) ? 1 : first;
    return {n0, last};
}

ThresholdReport theorem3_N(const ZeroCountModel& m, double tau, const Radius& r) {
    m.validate();
    require_tau(tau);
    require_r(r);
    const long double lt = tau;
    const long double logr = r.log_radius();

    ThresholdReport rep;
    rep.theorem = TheoremId::exp1;

    const long double t0_term = m.t0 / (kE * lt);
    const long double k_term =
        12.0L *
        std::log(40.0L * (0.5L + detail::k1l(m, lt) + detail::k4l(m, lt))) / logr;
    long double best = std::max(t0_term, k_term);
    push(rep.diagnostics, "T0/(e tau)", t0_term);
    if (logr <= 3.0L / (2.0L * kE)) {
        long double w_term;
        try {
            w_term = std::exp(-lambert_wm1l(-2.0L * logr / 3.0L));
        } catch (const std::domain_error&) {
            throw std::domain_error("branch condition violated");
        }
        best = std::max(best, w_term);
        push(rep.diagnostics, "W-term", w_term);
    } else {
        best = std::max(best, kE);
        push(rep.diagnostics, "e", kE);
    }
    push(rep.diagnostics, "K1K4-term", k_term);

    rep.n = ceil_hardened(best);
    rep.grid_max = 5 * rep.n;
    push(rep.diagnostics, "N-raw", best);
    return rep;
}

double detector_threshold(long long n, const ZeroCountModel& m, double tau) {
    m.validate();
    require_tau(tau);
    if (n < 3) throw std::domain_error("detector threshold requires n >= 3");
    const long double nl = static_cast<long double>(n);
    return static_cast<double>((detail::k1l(m, tau) + detail::k4l(m, tau)) * nl *
                               std::log(nl));
}

}  // namespace tauli
