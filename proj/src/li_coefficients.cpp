#include "tauli/li_coefficients.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tauli {

namespace {

// |image|^n with log-modulus above this is classified, not evaluated.
const long double kOverflowLog = std::log(1e300L);

// Neumaier-compensated accumulator.
struct Kahan {
    long double sum = 0.0L, comp = 0.0L;
    void add(long double v) {
        const long double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    long double total() const { return sum + comp; }
};

std::complex<long double> pow_by_squaring(std::complex<long double> z, long long n) {
    std::complex<long double> acc{1.0L, 0.0L};
    while (n > 0) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

struct TermCore {
    std::complex<long double> value{0.0L, 0.0L};
    bool overflow = false;
    int re_sign = 0;
    long double abs_term = 0.0L;
};

TermCore li_term_core(std::complex<double> rho, long long n, double tau) {
    if (!(tau > 0.0)) throw std::domain_error("li_term requires tau > 0");
    if (n < 1) throw std::domain_error("li_term requires n >= 1");
    const std::complex<long double> r{static_cast<long double>(rho.real()),
                                      static_cast<long double>(rho.imag())};
    const std::complex<long double> d = r - static_cast<long double>(tau);
    if (std::abs(d) < 1e-300L)
        throw std::domain_error("Moebius map singular: rho is within 1e-300 of tau");
    const std::complex<long double> z = r / d;

    TermCore out;
    const long double log_mod = std::log(std::abs(z));
    if (static_cast<long double>(n) * log_mod > kOverflowLog) {
        const long double a = std::arg(z);
        const long double c =
            std::cos(std::fmod(static_cast<long double>(n) * a, 2.0L * M_PIl));
        out.overflow = true;
        out.re_sign = (c > 0.0L) ? -1 : 1;  // term = 1 - z^n
        const double inf = std::numeric_limits<double>::infinity();
        out.value = {out.re_sign > 0 ? inf : -inf, 0.0L};
        out.abs_term = std::numeric_limits<long double>::infinity();
        return out;
    }
    std::complex<long double> zn;
    if (n <= 1000) {
        zn = pow_by_squaring(z, n);
    } else {
        const long double mag = std::exp(static_cast<long double>(n) * log_mod);
        const long double ang =
            std::fmod(static_cast<long double>(n) * std::arg(z), 2.0L * M_PIl);
        zn = {mag * std::cos(ang), mag * std::sin(ang)};
    }
    out.value = std::complex<long double>{1.0L, 0.0L} - zn;
    out.abs_term = std::abs(out.value);
    out.re_sign = (out.value.real() > 0.0L) ? 1 : (out.value.real() < 0.0L ? -1 : 0);
    return out;
}

}  // namespace

MobiusImage mobius_map(std::complex<double> rho, double tau) {
    if (!(tau > 0.0)) throw std::domain_error("mobius_map requires tau > 0");
    const std::complex<long double> r{static_cast<long double>(rho.real()),
                                      static_cast<long double>(rho.imag())};
    const std::complex<long double> d = r - static_cast<long double>(tau);
    if (std::abs(d) < 1e-300L)
        throw std::domain_error("Moebius map singular: rho is within 1e-300 of tau");
    const std::complex<long double> z = r / d;
    MobiusImage img;
    img.x = static_cast<double>(z.real());
    img.y = static_cast<double>(z.imag());
    img.modulus = static_cast<double>(std::abs(z));
    img.log_modulus = static_cast<double>(std::log(std::abs(z)));
    img.arg = static_cast<double>(std::arg(z));
    return img;
}

LiTerm li_term(std::complex<double> rho, long long n, double tau) {
    const TermCore c = li_term_core(rho, n, tau);
    LiTerm t;
    t.overflow = c.overflow;
    t.re_sign = c.re_sign;
    t.value = {static_cast<double>(c.value.real()), static_cast<double>(c.value.imag())};
    return t;
}

std::complex<double> li_partial(const ZeroSet& zeros, long long n) {
    Kahan re, im;
    int inf_sign = 0;
    for (const auto& rho : zeros.zeros()) {
        const TermCore c = li_term_core(rho, n, zeros.tau());
        if (c.overflow) {
            if (inf_sign != 0 && inf_sign != c.re_sign)
                throw std::overflow_error(
                    "li_partial: overflowing terms of opposite sign, sum indeterminate");
            inf_sign = c.re_sign;
            continue;
        }
        re.add(c.value.real());
        im.add(c.value.imag());
    }
    if (inf_sign != 0) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf_sign > 0 ? inf : -inf, static_cast<double>(im.total())};
    }
    return {static_cast<double>(re.total()), static_cast<double>(im.total())};
}

double re_li_partial(const ZeroSet& zeros, long long n) {
    return li_partial(zeros, n).real();
}

double tail_sum(const ZeroSet& zeros, long long n, double t_lo, double t_hi) {
    if (!(t_lo < t_hi)) throw std::domain_error("tail_sum requires t_lo < t_hi");
    Kahan re;
    int inf_sign = 0;
    for (const auto& rho : zeros.zeros()) {
        const double h = std::fabs(rho.imag());
        if (!(h > t_lo && h <= t_hi)) continue;
        const TermCore c = li_term_core(rho, n, zeros.tau());
        if (c.overflow) {
            if (inf_sign != 0 && inf_sign != c.re_sign)
                throw std::overflow_error(
                    "tail_sum: overflowing terms of opposite sign, sum indeterminate");
            inf_sign = c.re_sign;
            continue;
        }
        re.add(c.value.real());
    }
    if (inf_sign != 0)
        return inf_sign > 0 ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
    return static_cast<double>(re.total());
}

double tail_abs_sum(const ZeroSet& zeros, long long n, double t_lo) {
    Kahan acc;
    for (const auto& rho : zeros.zeros()) {
        if (!(std::fabs(rho.imag()) > t_lo)) continue;
        const TermCore c = li_term_core(rho, n, zeros.tau());
        if (c.overflow) return std::numeric_limits<double>::infinity();
        acc.add(c.abs_term);
    }
    return static_cast<double>(acc.total());
}

double lambda1_closed_form(const ZeroSet& zeros) {
    Kahan acc;
    const long double tau = zeros.tau();
    for (const auto& rho : zeros.zeros()) {
        const long double dre = static_cast<long double>(rho.real()) - tau;
        const long double dim = rho.imag();
        acc.add(tau * (-dre) / (dre * dre + dim * dim));
    }
    return static_cast<double>(acc.total());
}

}  // namespace tauli
