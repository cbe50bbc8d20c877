#include "tauli/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <stdexcept>

#include "tauli/explicit_constants.hpp"
#include "tauli/li_coefficients.hpp"

namespace tauli {

namespace {
constexpr double kE = 2.718281828459045235;
}

std::pair<long long, double> min20_witness(std::vector<std::complex<double>> points,
                                           std::size_t max_m) {
    if (points.empty()) throw std::domain_error("min20_witness requires M >= 1");
    if (points.size() > max_m)
        throw std::length_error("min20_witness: M exceeds the brute-force guard");
    double mmax = 0.0;
    for (const auto& z : points) mmax = std::max(mmax, std::abs(z));
    if (!(mmax > 0.0) || !std::isfinite(mmax))
        throw std::domain_error("min20_witness requires a nonzero finite point");
    for (auto& z : points) z /= mmax;

    const long long n_hi = 5 * static_cast<long long>(points.size());
    long long best_n = 1;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::complex<double>> pow(points.size(), {1.0, 0.0});
    for (long long n = 1; n <= n_hi; ++n) {
        double re = 0.0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            pow[j] *= points[j];
            re += pow[j].real();
        }
        if (re > best) {
            best = re;
            best_n = n;
        }
    }
    return {best_n, best};
}

OracleVerdict tail_bound_check(const ZeroSet& zeros, const ZeroCountModel& m,
                               long long n) {
    OracleVerdict v;
    v.property = "tail-bound";
    v.truncated = true;
    const double tau = zeros.tau();
    if (n < 3 || static_cast<double>(n) < m.t0 / (kE * tau))
        throw std::domain_error("tail_bound_check requires n >= max{3, T0/(e tau)}");
    const double t_n = static_cast<double>(n) * kE * tau;
    double h_max = 0.0;
    for (const auto& z : zeros.zeros()) h_max = std::max(h_max, std::fabs(z.imag()));
    if (h_max < 4.0 * t_n)
        throw std::domain_error("insufficient height: data must reach 4 T(n)");

    v.lhs = std::fabs(tail_sum(zeros, n, t_n, h_max));
    v.rhs = k1(m, tau) * static_cast<double>(n) * std::log(static_cast<double>(n));
    v.passed = v.lhs < v.rhs;
    v.has_witness = true;
    v.witness_n = n;
    v.note = "finite window standing in for the infinite tail";
    return v;
}

std::optional<std::tuple<long long, double, double>> theorem_smallzeros_witness(
    const ZeroSet& zeros, const ZeroCountModel& m, double r_value,
    long long grid_guard) {
    if (!(r_value > 1.0)) throw std::domain_error("witness search requires R > 1");
    const double tau = zeros.tau();

    bool hypothesis = false;
    for (const auto& z : zeros.zeros()) {
        if (mobius_map(z, tau).modulus >= r_value) {
            hypothesis = true;
            break;
        }
    }
    if (!hypothesis) return std::nullopt;

    const Radius r = Radius::from_value(r_value);
    const ThresholdReport rep = theorem1_N(m, tau, r);
    const MultipleGrid grid = theorem1_grid(rep);
    if (grid.count() > grid_guard)
        throw std::length_error("witness grid exceeds the enumeration guard");

    const double n_height = static_cast<double>(rep.n);
    const double count =
        static_cast<double>(zeros.count_below(n_height));
    const long double logr = r.log_radius();
    for (long long i = 0; i < grid.count(); ++i) {
        const long long n = grid.nth(i);
        const long double rn_log = static_cast<long double>(n) * logr;
        if (rn_log > 690.0L) break;  // R^n out of double range; no decision past here
        const double rhs =
            count - static_cast<double>(std::exp(rn_log)) / 20.0;
        const double lhs = tail_sum(zeros, n, -1.0, n_height);
        if (lhs < rhs) return std::make_tuple(n, lhs, rhs);
    }
    return std::nullopt;
}

OracleVerdict detector_check(const ZeroSet& zeros, const ZeroCountModel& m,
                             const Radius& r) {
    const double tau = zeros.tau();
    std::size_t off_line = 0;
    for (const auto& z : zeros.zeros())
        if (mobius_map(z, tau).modulus > 1.0 + 1e-12) ++off_line;
    if (off_line > 1)
        throw std::invalid_argument("detector_check allows at most one off-line zero");

    const ThresholdReport rep = theorem3_N(m, tau, r);
    OracleVerdict v;
    v.property = "detector";
    bool tripped = false;
    double best_ratio = -1.0;
    for (long long n = rep.n; n <= rep.grid_max; n += rep.n) {
        const double re = re_li_partial(zeros, n);
        const double thr = detector_threshold(n, m, tau);
        const double mag = std::fabs(re);
        if (mag >= thr) {
            tripped = true;
            v.witness_n = n;
            v.lhs = mag;
            v.rhs = thr;
            break;
        }
        const double ratio = mag / thr;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            v.witness_n = n;
            v.lhs = mag;
            v.rhs = thr;
        }
    }
    v.has_witness = tripped;
    v.passed = tripped == (off_line == 1);
    v.note = off_line == 1 ? "one off-line zero present" : "all zeros on the critical line";
    return v;
}

OracleVerdict lambda1_check(const ZeroSet& zeros) {
    OracleVerdict v;
    v.property = "lambda1";
    const double tau = zeros.tau();
    double min_re = std::numeric_limits<double>::infinity();
    double max_dev = 0.0;
    for (const auto& rho : zeros.zeros()) {
        const double direct = li_term(rho, 1, tau).value.real();
        const double dre = rho.real() - tau;
        const double dim = rho.imag();
        const double closed = tau * (tau - rho.real()) / (dre * dre + dim * dim);
        min_re = std::min(min_re, direct);
        max_dev = std::max(max_dev,
                           std::fabs(direct - closed) / std::max(1.0, std::fabs(closed)));
    }
    const double total = re_li_partial(zeros, 1);
    v.lhs = zeros.size() == 0 ? 0.0 : min_re;
    v.rhs = 0.0;
    v.passed = (zeros.size() == 0 || min_re >= -1e-15) && max_dev <= 1e-12 &&
               total >= -1e-12;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max closed-form deviation %.3g, lambda(1) = %.6g",
                  max_dev, total);
    v.note = buf;
    return v;
}

}  // namespace tauli
