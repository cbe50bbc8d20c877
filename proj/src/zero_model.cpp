#include "tauli/zero_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tauli {

namespace {

constexpr double kStripSlack = 1e-12;

void require_strip(std::complex<double> rho, double tau, std::size_t line) {
    if (!(std::isfinite(rho.real()) && std::isfinite(rho.imag())))
        throw std::runtime_error("zero is not finite at line " + std::to_string(line));
    if (rho.real() < -kStripSlack || rho.real() > tau + kStripSlack)
        throw std::runtime_error("zero outside the strip [0, tau] at line " +
                                 std::to_string(line));
    // The single point rho = tau is excluded (the coefficient terms have a
    // pole there); the rest of the line Re = tau is admissible.
    if (std::abs(rho.imag()) <= kStripSlack && rho.real() >= tau - kStripSlack)
        throw std::runtime_error("zero at rho = tau is excluded at line " +
                                 std::to_string(line));
}

void require_height(const ZeroCountModel& m, double t) {
    if (!(t >= m.t0))
        throw std::domain_error("height below the model's validity threshold T0");
}

}  // namespace

void ZeroCountModel::validate() const {
    if (!(a_f > 0.0)) throw std::invalid_argument("model requires a_f > 0");
    if (!(t0 > 0.0)) throw std::invalid_argument("model requires t0 > 0");
    if (!std::isfinite(b_f)) throw std::invalid_argument("model b_f must be finite");
    for (double v : {c1, c2, c3, d1, d2, d3})
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("model error constants must be finite and >= 0");
}

std::vector<std::string> ZeroCountModel::consistency_warnings() const {
    std::vector<std::string> w;
    const DyadicConstants ref = derive_dyadic_constants(*this);
    char buf[160];
    if (d1 > ref.d1 * (1.0 + 1e-12)) {
        std::snprintf(buf, sizeof buf, "dyadic d1=%.6g exceeds 2*c1=%.6g", d1, ref.d1);
        w.emplace_back(buf);
    }
    if (d2 > ref.d2 * (1.0 + 1e-12) + 1e-300) {
        std::snprintf(buf, sizeof buf, "dyadic d2=%.6g exceeds 2*c2 + c1*log2=%.6g", d2, ref.d2);
        w.emplace_back(buf);
    }
    if (d3 > ref.d3 * (1.0 + 1e-12) + 1e-300) {
        std::snprintf(buf, sizeof buf, "dyadic d3=%.6g exceeds 1.5*c3=%.6g", d3, ref.d3);
        w.emplace_back(buf);
    }
    return w;
}

ZeroCountModel catalog_dirichlet(long long q) {
    if (q < 3) throw std::domain_error("Dirichlet modulus must satisfy q >= 3");
    const double lq = std::log(static_cast<double>(q));
    ZeroCountModel m;
    m.a_f = 1.0 / M_PI;
    m.b_f = (lq - std::log(2.0 * M_PI) - 1.0) / M_PI;  // (1/pi) log(q/(2 pi e))
    m.t0 = 1.0;
    m.c1 = 0.317;
    m.c2 = 0.317 * lq + 6.401;
    m.c3 = 0.0;
    m.d1 = 0.634;
    m.d2 = 0.317 * std::log(2.0) + 0.634 * lq + 12.802;
    m.d3 = 0.0;
    m.validate();
    return m;
}

NewformCatalog catalog_newform() {
    ZeroCountModel m;
    m.a_f = 1.0 / M_PI;
    m.b_f = -(1.0 + std::log(4.0 * M_PI * M_PI)) / M_PI;
    m.t0 = 27.0;
    m.c1 = 586.0;
    m.c2 = 3904.0;
    m.c3 = 23274.0;
    m.d1 = 864.0;
    m.d2 = 3622.0;
    m.d3 = 21012.0;
    m.validate();
    return NewformCatalog{m, 14};
}

DyadicConstants derive_dyadic_constants(const ZeroCountModel& m) {
    return DyadicConstants{2.0 * m.c1, 2.0 * m.c2 + m.c1 * std::log(2.0), 1.5 * m.c3};
}

double count_main(const ZeroCountModel& m, double t) {
    require_height(m, t);
    return m.a_f * t * std::log(t) + m.b_f * t;
}

double count_upper(const ZeroCountModel& m, double t) {
    require_height(m, t);
    return count_main(m, t) + m.c1 * std::log(t) + m.c2 + m.c3 / t;
}

double count_lower(const ZeroCountModel& m, double t) {
    require_height(m, t);
    const double v = count_main(m, t) - (m.c1 * std::log(t) + m.c2 + m.c3 / t);
    return std::max(v, 0.0);
}

double dyadic_count_upper(const ZeroCountModel& m, double t) {
    require_height(m, t);
    const double lt = std::log(t);
    return m.a_f * t * std::log(4.0 * t) + m.b_f * t + m.d1 * lt + m.d2 + m.d3 / t;
}

long long count_estimate_integer(const ZeroCountModel& m, double t) {
    const double u = count_upper(m, t);
    if (u <= 0.0) return 0;
    return static_cast<long long>(std::floor(u));
}

ZeroSet::ZeroSet(std::vector<std::complex<double>> zeros, double tau)
    : zeros_(std::move(zeros)), tau_(tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("ZeroSet requires tau > 0");
    for (std::size_t i = 0; i < zeros_.size(); ++i) require_strip(zeros_[i], tau, i + 1);
    std::sort(zeros_.begin(), zeros_.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.imag() != b.imag()) return a.imag() < b.imag();
                  return a.real() < b.real();
              });
}

std::size_t ZeroSet::count_below(double t) const {
    if (!(t >= 0.0)) return 0;
    auto lo = std::lower_bound(zeros_.begin(), zeros_.end(), -t,
                               [](const std::complex<double>& z, double v) {
                                   return z.imag() < v;
                               });
    auto hi = std::upper_bound(zeros_.begin(), zeros_.end(), t,
                               [](double v, const std::complex<double>& z) {
                                   return v < z.imag();
                               });
    return static_cast<std::size_t>(hi - lo);
}

void ZeroSet::serialize(std::ostream& os) const {
    char buf[80];
    for (const auto& z : zeros_) {
        std::snprintf(buf, sizeof buf, "%.17g\t%.17g\n", z.real(), z.imag());
        os << buf;
    }
}

ZeroSet load_zeros(std::istream& is, double tau) {
    std::vector<std::complex<double>> zs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double re, im;
        if (!(ls >> re)) {
            if (ls.eof()) continue;  // blank / comment-only line
            throw std::runtime_error("unparseable zero at line " + std::to_string(lineno));
        }
        if (!(ls >> im))
            throw std::runtime_error("missing imaginary part at line " + std::to_string(lineno));
        std::string rest;
        if (ls >> rest)
            throw std::runtime_error("trailing data at line " + std::to_string(lineno));
        require_strip({re, im}, tau, lineno);
        zs.emplace_back(re, im);
    }
    return ZeroSet(std::move(zs), tau);
}

ZeroCountModel load_model(std::istream& is, std::vector<std::string>* warnings) {
    std::map<std::string, double> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw std::runtime_error("expected key=value at line " + std::to_string(lineno));
        }
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t\r") + 1);
        std::istringstream vs(line.substr(eq + 1));
        double v;
        if (!(vs >> v))
            throw std::runtime_error("unparseable value at line " + std::to_string(lineno));
        if (!kv.emplace(key, v).second)
            throw std::runtime_error("duplicate key '" + key + "' at line " + std::to_string(lineno));
    }
    auto need = [&](const char* k) {
        auto it = kv.find(k);
        if (it == kv.end()) throw std::runtime_error(std::string("missing model key ") + k);
        return it->second;
    };
    ZeroCountModel m;
    m.a_f = need("A_F");
    m.b_f = need("B_F");
    m.t0 = need("T0");
    m.c1 = need("C1");
    m.c2 = need("C2");
    m.c3 = need("C3");
    const bool has_dyadic = kv.count("c1") || kv.count("c2") || kv.count("c3");
    if (has_dyadic) {
        m.d1 = need("c1");
        m.d2 = need("c2");
        m.d3 = need("c3");
    } else {
        const DyadicConstants d = derive_dyadic_constants(m);
        m.d1 = d.d1;
        m.d2 = d.d2;
        m.d3 = d.d3;
    }
    for (const auto& [k, v] : kv) {
        (void)v;
        static const char* known[] = {"A_F", "B_F", "T0", "C1", "C2", "C3", "c1", "c2", "c3"};
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* s) { return k == s; }) == std::end(known))
            throw std::runtime_error("unknown model key '" + k + "'");
    }
    m.validate();
    if (warnings)
        for (auto& w : m.consistency_warnings()) warnings->push_back(std::move(w));
    return m;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return (next() >> 11) * 0x1.0p-53; }
};

// Smallest T >= lo with main(T) = target; main is increasing where
// a_f log T + a_f + b_f > 0, which holds on the scanned range.
double solve_main(const ZeroCountModel& m, double target, double lo) {
    double a = std::max(lo, std::exp(-m.b_f / m.a_f) * 1.0000000001);
    if (m.a_f * a * std::log(a) + m.b_f * a >= target) return a;
    double b = std::max(a * 2.0, 2.0);
    while (m.a_f * b * std::log(b) + m.b_f * b < target) {
        b *= 2.0;
        if (b > 1e18) throw std::runtime_error("zero synthesis target height overflow");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (a + b);
        if (m.a_f * mid * std::log(mid) + m.b_f * mid < target)
            a = mid;
        else
            b = mid;
        if (b - a <= 1e-13 * b) break;
    }
    return b;
}

}  // namespace

ZeroSet synthesize_zeros(const ZeroCountModel& m, double height,
                         double fraction_off_line, double r_off, double tau,
                         std::uint64_t seed) {
    m.validate();
    if (!(tau > 0.0)) throw std::domain_error("synthesis requires tau > 0");
    if (!(height >= m.t0)) throw std::domain_error("synthesis height must be >= T0");
    if (!(fraction_off_line >= 0.0 && fraction_off_line <= 1.0))
        throw std::domain_error("fraction_off_line must lie in [0, 1]");
    if (fraction_off_line > 0.0 && !(r_off > 1.0))
        throw std::domain_error("off-line placement requires r_off > 1");

    // The count model is two-sided (|Im| <= T), so each conjugate pair adds 2.
    // Pair k is placed where the main term passes 2k - 1 (+ seeded jitter of
    // at most 0.8), which keeps |N(T) - main(T)| <= 1.85 everywhere; the
    // envelope must absorb that.
    const double slack0 = m.c1 * std::log(m.t0) + m.c2 + m.c3 / m.t0;
    if (slack0 < 1.9)
        throw std::runtime_error("envelope too tight for synthesis at T0");

    const double target_total = m.a_f * height * std::log(height) + m.b_f * height;
    if (target_total < 1.0) {
        if (fraction_off_line > 0.0)
            throw std::runtime_error("no zeros below requested height to place off-line");
        return ZeroSet({}, tau);
    }

    const std::size_t pairs = static_cast<std::size_t>(std::floor((target_total + 1.0) / 2.0));
    if (pairs > 20'000'000) throw std::runtime_error("synthesis would emit too many zeros");

    SplitMix64 ladder_rng{seed};
    std::vector<double> heights(pairs);
    double lo = m.t0;
    for (std::size_t k = 0; k < pairs; ++k) {
        const double base = 2.0 * static_cast<double>(k) + 1.0;
        const double jitter = 0.8 * ladder_rng.uniform01() *
                              std::min(1.0, std::max(0.0, target_total - base));
        lo = solve_main(m, base + jitter, lo);
        heights[k] = lo;
    }

    std::size_t off_pairs = static_cast<std::size_t>(std::floor(fraction_off_line * pairs));
    if (fraction_off_line > 0.0 && off_pairs == 0) off_pairs = 1;

    // Off-line zeros live on the circle |rho/(rho-tau)| = r_off, which caps
    // their height at tau/sqrt(r_off^2 - 1).
    const double off2 = (r_off - 1.0) * (r_off + 1.0);
    const double off_cap = tau / std::sqrt(off2);
    const double circ_radius = r_off * tau / off2;
    const double re_min = r_off * tau / (1.0 + r_off);

    std::vector<std::complex<double>> zs;
    zs.reserve(2 * pairs);
    std::size_t placed_off = 0;
    for (std::size_t k = 0; k < pairs; ++k) {
        const double t = heights[k];
        double sigma = tau / 2.0;
        if (placed_off < off_pairs && t < off_cap * 0.999999) {
            const double ratio = t / circ_radius;
            // sigma on the circle at height t, left of centre, written to
            // avoid the cancellation of centre - sqrt(radius^2 - t^2).
            sigma = re_min + t * ratio / (1.0 + std::sqrt((1.0 - ratio) * (1.0 + ratio)));
            ++placed_off;
        }
        zs.emplace_back(sigma, t);
        zs.emplace_back(sigma, -t);
    }
    if (placed_off < off_pairs)
        throw std::runtime_error("off-line radius caps heights below the ladder; "
                                 "cannot place the requested off-line zeros");

    ZeroSet set(std::move(zs), tau);

    // Audit: the two-sided count must respect the envelope at every integer
    // height in [T0, height] and at each ladder breakpoint.
    auto check = [&](double t) {
        if (t < m.t0 || t > height) return;
        const double n = static_cast<double>(set.count_below(t));
        const double main = m.a_f * t * std::log(t) + m.b_f * t;
        const double slack = m.c1 * std::log(t) + m.c2 + m.c3 / t;
        if (std::abs(n - main) > slack + 1e-9)
            throw std::runtime_error("synthesized set violates the count envelope");
    };
    const double step = std::max(1.0, std::floor((height - m.t0) / 2e6));
    for (double t = std::ceil(m.t0); t <= height; t += step) check(t);
    check(height);
    for (double h : heights) {
        check(std::nextafter(h, 0.0));
        check(h);
    }
    return set;
}

}  // namespace tauli
