// Command-line surface for the tau-Li zero-region toolkit.
//
// Subcommands: constants, table, thresholds, li, region, verify.
// Global flags: --format human|csv|json-lines, --seed, --jobs.
// Exit codes: 0 success, 1 mismatch/verification failure, 2 usage/domain error.

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "tauli/explicit_constants.hpp"
#include "tauli/io_format.hpp"
#include "tauli/lambert.hpp"
#include "tauli/li_coefficients.hpp"
#include "tauli/reference_tables.hpp"
#include "tauli/region_geometry.hpp"
#include "tauli/thresholds.hpp"
#include "tauli/verification.hpp"
#include "tauli/zero_model.hpp"

namespace {

enum class Format { human, csv, json_lines };

using Rec = std::vector<tauli::JsonField>;

tauli::JsonField num(std::string key, double v) {
    return {std::move(key), tauli::format_g17(v), false};
}

tauli::JsonField integer(std::string key, long long v) {
    return {std::move(key), std::to_string(v), false};
}

tauli::JsonField label(std::string key, std::string v) {
    return {std::move(key), std::move(v), true};
}

// In JSON a non-finite number has no literal; quote it instead.
void json_safe(Rec& rec) {
    for (auto& f : rec) {
        if (!f.quoted && (f.value == "inf" || f.value == "-inf" || f.value == "nan"))
            f.quoted = true;
    }
}

void emit_records(Format fmt, const std::vector<Rec>& recs, std::ostream& os) {
    if (fmt == Format::json_lines) {
        for (Rec rec : recs) {
            json_safe(rec);
            os << tauli::json_line(rec) << "\n";
        }
        return;
    }
    if (fmt == Format::csv) {
        if (recs.empty()) return;
        std::vector<std::string> header;
        for (const auto& f : recs.front()) header.push_back(f.key);
        os << tauli::csv_join(header) << "\n";
        for (const auto& rec : recs) {
            std::vector<std::string> row;
            for (const auto& f : rec) row.push_back(f.value);
            os << tauli::csv_join(row) << "\n";
        }
        return;
    }
    for (const auto& rec : recs) {
        bool first = true;
        for (const auto& f : rec) {
            if (!first) os << "  ";
            os << f.key << "=" << f.value;
            first = false;
        }
        os << "\n";
    }
}

// ---------------------------------------------------------------------------
// Deterministic RNG for the verification suites (identical on every platform,
// unlike the distributions of <random>).
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

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t suite, std::uint64_t trial) {
    return base + suite * 0xD1B54A32D192ED03ULL + trial * 0x9E3779B97F4A7C15ULL;
}

// ---------------------------------------------------------------------------
// Model selection shared by constants/thresholds.
struct ModelFlags {
    long long dirichlet_q = 0;
    bool newform = false;
    std::string model_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--dirichlet", dirichlet_q,
                        "Dirichlet family: primitive non-principal character mod q (q >= 3)");
        cmd->add_flag("--newform", newform, "level-1 weight-12 newform family");
        cmd->add_option("--model", model_file,
                        "zero-count model file (keys A_F,B_F,T0,C1,C2,C3[,c1,c2,c3])");
    }

    tauli::ZeroCountModel resolve() const {
        const int picked = (dirichlet_q != 0) + (newform ? 1 : 0) + (!model_file.empty());
        if (picked != 1)
            throw std::domain_error(
                "exactly one of --dirichlet, --newform, --model is required");
        std::vector<std::string> warnings;
        tauli::ZeroCountModel m;
        if (dirichlet_q != 0) {
            try {
                m = tauli::catalog_dirichlet(dirichlet_q);
            } catch (const std::exception& e) {
                throw std::domain_error(std::string("--dirichlet: ") + e.what());
            }
        } else if (newform) {
            m = tauli::catalog_newform().model;
        } else {
            std::ifstream in(model_file);
            if (!in) throw std::domain_error("--model: cannot open '" + model_file + "'");
            try {
                m = tauli::load_model(in, &warnings);
            } catch (const std::exception& e) {
                throw std::domain_error("--model: " + std::string(e.what()));
            }
        }
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        return m;
    }
};

// ---------------------------------------------------------------------------
// constants
int cmd_constants(Format fmt, const ModelFlags& mf, double tau,
                  std::optional<double> t_height) {
    const tauli::ZeroCountModel m = mf.resolve();
    const tauli::ConstantBundle b = tauli::constant_bundle(m, tau);
    const double log_k2 = static_cast<double>(
        tauli::detail::log_k2l(m, static_cast<long double>(tau)));
    const double k2_exponent = (5.0 * tau * tau * b.m_f + 2.0) / 2.0;

    Rec rec;
    rec.push_back(num("A_F", m.a_f));
    rec.push_back(num("B_F", m.b_f));
    rec.push_back(num("T0", m.t0));
    rec.push_back(num("C1", m.c1));
    rec.push_back(num("C2", m.c2));
    rec.push_back(num("C3", m.c3));
    rec.push_back(num("c1_dyadic", m.d1));
    rec.push_back(num("c2_dyadic", m.d2));
    rec.push_back(num("c3_dyadic", m.d3));
    rec.push_back(num("tau", tau));
    rec.push_back(num("M_F", b.m_f));
    rec.push_back(num("K1", b.k1));
    rec.push_back(num("K2", b.k2));
    rec.push_back(num("log_K2", log_k2));
    rec.push_back(num("K2_exponent", k2_exponent));
    rec.push_back(num("K4", b.k4));
    if (t_height) {
        rec.push_back(num("T", *t_height));
        rec.push_back(num("K3", b.k3(*t_height)));
    }

    if (fmt == Format::human) {
        std::cout << "model:\n";
        std::size_t i = 0;
        for (const auto& f : rec) {
            if (f.key == "tau") std::cout << "constants at tau = " << f.value << ":\n";
            else std::cout << "  " << f.key << " = " << f.value << "\n";
            ++i;
        }
    } else {
        emit_records(fmt, {rec}, std::cout);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// table
int cmd_table(Format fmt, int which) {
    std::vector<Rec> recs;
    bool mismatch = false;
    const auto status = [&](bool ok) {
        mismatch = mismatch || !ok;
        return label("status", ok ? "ok" : "MISMATCH");
    };

    if (which == 1) {
        const auto& rows = tauli::table1_expected();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            const auto got = tauli::table1_recompute(row);
            const bool ok = got.n_region == row.n_region && got.grid_max == row.grid_max &&
                            got.n_detector == row.n_detector;
            recs.push_back({integer("table", 1), integer("row", (long long)i),
                            num("tau", row.tau), label("R", row.r_label),
                            integer("N_expected", row.n_region),
                            integer("N_computed", got.n_region),
                            integer("grid_expected", row.grid_max),
                            integer("grid_computed", got.grid_max),
                            integer("detector_expected", row.n_detector),
                            integer("detector_computed", got.n_detector), status(ok)});
        }
    } else if (which == 2) {
        const auto& rows = tauli::table2_expected();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            const auto got = tauli::table2_recompute(row);
            const bool ok = got.n0 == row.n0 && got.n1 == row.n1;
            recs.push_back({integer("table", 2), integer("row", (long long)i),
                            num("T", row.t_height), num("tau", row.tau),
                            label("R", row.r_label), integer("n0_expected", row.n0),
                            integer("n0_computed", got.n0), integer("n1_expected", row.n1),
                            integer("n1_computed", got.n1), status(ok)});
        }
    } else {
        const auto& rows = tauli::table3_expected();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            const auto got = tauli::table3_recompute(row);
            const bool ok = got.n_detector == row.n_detector;
            recs.push_back({integer("table", 3), integer("row", (long long)i),
                            num("tau", row.tau), label("R", row.r_label),
                            integer("N_expected", row.n_detector),
                            integer("N_computed", got.n_detector), status(ok)});
        }
    }

    emit_records(fmt, recs, std::cout);
    if (fmt == Format::human) {
        std::cout << (mismatch ? "MISMATCH: recomputation differs from the published values\n"
                               : "all rows match the published values\n");
    }
    return mismatch ? 1 : 0;
}

// ---------------------------------------------------------------------------
// thresholds
void push_diagnostics(Rec& rec, const tauli::Diagnostics& diag) {
    for (const auto& [name, value] : diag) rec.push_back(num(name, value));
}

int cmd_thresholds(Format fmt, int theorem, const ModelFlags& mf, double tau,
                   const std::string& r_text, std::optional<double> t_height,
                   bool direct) {
    const tauli::ZeroCountModel m = mf.resolve();
    if (theorem != 2 && (t_height || direct))
        throw std::domain_error("--T/--direct apply to theorem 2 only");

    if (theorem == 1 || theorem == 3) {
        const tauli::Radius r = tauli::Radius::from_decimal_string(r_text);
        const tauli::ThresholdReport rep = theorem == 1
                                               ? tauli::theorem1_N(m, tau, r)
                                               : tauli::theorem3_N(m, tau, r);
        Rec rec{integer("theorem", theorem), num("tau", tau), label("R", r_text),
                integer("N", rep.n), integer("grid_max", rep.grid_max)};
        if (theorem == 1) {
            const tauli::MultipleGrid grid = tauli::theorem1_grid(rep);
            rec.push_back(integer("grid_count", grid.count()));
            rec.push_back(integer("grid_first", grid.first()));
            rec.push_back(integer("grid_last", grid.last()));
        } else {
            rec.push_back(integer("grid_count", 5));
            rec.push_back(integer("grid_first", rep.n));
            rec.push_back(integer("grid_last", rep.grid_max));
        }
        push_diagnostics(rec, rep.diagnostics);
        emit_records(fmt, {rec}, std::cout);
        return 0;
    }

    // Theorem 2 requires a height.
    if (!t_height) throw std::domain_error("theorem 2 requires --T");
    const double t = *t_height;
    const tauli::Radius r = tauli::Radius::from_decimal_string(r_text);
    const tauli::DiagnosedValue floor = tauli::theorem2_t_floor(m);
    if (t < floor.value) {
        Rec rec{integer("theorem", 2), label("admissible", "false"),
                label("reason", "T below the admissibility floor"), num("T", t),
                num("T_floor", floor.value)};
        push_diagnostics(rec, floor.diagnostics);
        emit_records(fmt, {rec}, std::cout);
        return 2;
    }

    if (direct) {
        const double k3v = tauli::k3(m, t, tau);
        if (!(k3v > 0.0)) throw std::domain_error("K3 not positive at T");
        const long long count = tauli::count_estimate_integer(m, t);
        if (count <= 0) throw std::domain_error("zero count estimate is 0 at T");
        const long long n_max = tauli::floor_hardened(
            static_cast<long double>(t) /
            (2.71828182845904523536028747135266250L * static_cast<long double>(tau)));
        std::pair<long long, long long> span;
        try {
            span = tauli::interval_direct(k3v, count, r, n_max);
        } catch (const std::runtime_error& e) {
            Rec rec{integer("theorem", 2), label("method", "direct"),
                    label("admissible", "false"), label("reason", e.what()),
                    num("T", t), num("tau", tau), label("R", r_text),
                    num("K3", k3v), integer("count", count), integer("n_max", n_max)};
            emit_records(fmt, {rec}, std::cout);
            return 2;
        }
        Rec rec{integer("theorem", 2),   label("method", "direct"),
                label("admissible", "true"), num("T", t),
                num("tau", tau),         label("R", r_text),
                integer("n0", span.first),   integer("n1", span.second),
                num("K3", k3v),          integer("count", count),
                integer("n_max", n_max)};
        emit_records(fmt, {rec}, std::cout);
        return 0;
    }

    double cap = 0.0;
    try {
        cap = tauli::theorem2_r_cap(m, t, tau);
    } catch (const std::domain_error& e) {
        Rec rec{integer("theorem", 2), label("admissible", "false"),
                label("reason", e.what()), num("T", t), num("tau", tau)};
        emit_records(fmt, {rec}, std::cout);
        return 2;
    }
    if (r.value > cap) {
        Rec rec{integer("theorem", 2), label("admissible", "false"),
                label("reason", "R above the admissible cap"), label("R", r_text),
                num("R_cap", cap), num("T", t), num("T_floor", floor.value)};
        emit_records(fmt, {rec}, std::cout);
        return 2;
    }
    const tauli::ThresholdReport rep = tauli::theorem2_interval(m, t, tau, r);
    Rec rec{integer("theorem", 2),
            label("method", "closed-form"),
            label("admissible", rep.admissible ? "true" : "false"),
            num("T", t),
            num("tau", tau),
            label("R", r_text),
            integer("n0", rep.n0),
            integer("n1", rep.n1),
            num("T_floor", floor.value),
            num("R_cap", cap)};
    push_diagnostics(rec, rep.diagnostics);
    emit_records(fmt, {rec}, std::cout);
    return 0;
}

// ---------------------------------------------------------------------------
// li
std::vector<long long> parse_n_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) throw std::domain_error("--n: empty entry in list");
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(piece, &used);
        } catch (const std::exception&) {
            throw std::domain_error("--n: unparseable index '" + piece + "'");
        }
        if (used != piece.size() || v < 1)
            throw std::domain_error("--n: indices must be positive integers, got '" +
                                    piece + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::domain_error("--n: at least one index required");
    return out;
}

int cmd_li(Format fmt, const std::string& zeros_path, double tau,
           const std::string& n_text) {
    const std::vector<long long> ns = parse_n_list(n_text);
    std::ifstream in(zeros_path);
    if (!in) throw std::domain_error("--zeros: cannot open '" + zeros_path + "'");
    tauli::ZeroSet zeros = [&] {
        try {
            return tauli::load_zeros(in, tau);
        } catch (const std::exception& e) {
            throw std::domain_error("--zeros: " + std::string(e.what()));
        }
    }();

    std::vector<Rec> recs;
    for (long long n : ns) {
        const std::complex<double> lam = tauli::li_partial(zeros, n);
        recs.push_back({integer("n", n), num("re_lambda", lam.real()),
                        num("im_lambda", lam.imag()),
                        integer("terms", (long long)zeros.size())});
    }
    emit_records(fmt, recs, std::cout);
    return 0;
}

// ---------------------------------------------------------------------------
// region
int cmd_region(Format fmt, double tau, const std::string& r_text,
               std::optional<long long> q, long long samples,
               const std::string& out_path) {
    const tauli::Radius r = tauli::Radius::from_decimal_string(r_text);
    tauli::region(tau, r);  // validates tau/R and the construction
    const auto boundary = tauli::boundary_curve(tau, r, samples);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::domain_error("--out: cannot open '" + out_path + "'");
        os = &file;
    }

    std::vector<Rec> recs;
    for (const auto& [re, im] : boundary)
        recs.push_back({num("re", re), num("im", im), label("label", "apollonius")});
    if (q) {
        const long long steps = samples < 2 ? 2 : samples;
        for (long long i = 0; i < steps; ++i) {
            const double t = -80.0 + 160.0 * static_cast<double>(i) /
                                         static_cast<double>(steps - 1);
            recs.push_back({num("re", tauli::mccurley_sigma(*q, t)), num("im", t),
                            label("label", "mccurley")});
        }
        for (long long i = 0; i < steps; ++i) {
            const double t = -80.0 + 160.0 * static_cast<double>(i) /
                                         static_cast<double>(steps - 1);
            recs.push_back({num("re", tauli::kadiri_sigma(*q, t)), num("im", t),
                            label("label", "kadiri")});
        }
    }

    if (fmt == Format::json_lines) {
        emit_records(fmt, recs, *os);
    } else {
        // Curve output is CSV in both human and csv modes; the header names
        // the columns for downstream plotting tools.
        *os << "re,im,label\n";
        for (const auto& rec : recs) {
            std::vector<std::string> row;
            for (const auto& f : rec) row.push_back(f.value);
            *os << tauli::csv_join(row) << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
struct SuiteResult {
    std::string name;
    long long trials = 0;
    long long failures = 0;
    std::vector<std::string> notes;
};

template <typename Fn>
SuiteResult run_trials(const std::string& name, long long trials, int jobs, Fn&& fn) {
    SuiteResult res;
    res.name = name;
    res.trials = trials;
    std::atomic<long long> failures{0};
    std::mutex note_mu;
    std::vector<std::string> notes;

    const int workers = static_cast<int>(
        std::min<long long>(trials, jobs < 1 ? 1 : jobs));
    std::atomic<long long> next{0};
    auto body = [&] {
        for (;;) {
            const long long i = next.fetch_add(1);
            if (i >= trials) return;
            std::string note;
            bool ok = false;
            try {
                ok = fn(i, note);
            } catch (const std::exception& e) {
                note = e.what();
            }
            if (!ok) {
                failures.fetch_add(1);
                std::lock_guard<std::mutex> lock(note_mu);
                if (notes.size() < 5)
                    notes.push_back("trial " + std::to_string(i) + ": " +
                                    (note.empty() ? "failed" : note));
            }
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }
    res.failures = failures.load();
    res.notes = std::move(notes);
    return res;
}

SuiteResult suite_min20(std::uint64_t seed, long long trials, int jobs) {
    return run_trials("min20", trials, jobs, [seed](long long i, std::string& note) {
        SplitMix rng(trial_seed(seed, 1, (std::uint64_t)i));
        const std::size_t m = 1 + static_cast<std::size_t>(rng.next() % 8);
        std::vector<std::complex<double>> pts;
        for (std::size_t j = 0; j < m; ++j) {
            const double angle = 2.0 * M_PI * rng.uniform01();
            const double radius =
                (rng.next() & 1) ? 1.0 : std::sqrt(rng.uniform01());
            pts.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
        }
        const auto [n, value] = tauli::min20_witness(pts);
        if (n < 1 || n > static_cast<long long>(5 * m)) {
            note = "witness index outside [1, 5M]";
            return false;
        }
        if (!(value >= 0.05 - 1e-12)) {
            note = "maximum " + tauli::format_g17(value) + " below 1/20";
            return false;
        }
        return true;
    });
}

SuiteResult suite_lambda1(std::uint64_t seed, long long trials, int jobs) {
    return run_trials("lambda1", trials, jobs, [seed](long long i, std::string& note) {
        SplitMix rng(trial_seed(seed, 2, (std::uint64_t)i));
        tauli::ZeroSet zeros = [&] {
            if (i % 5 == 4) {
                // Synthesized envelope-conforming sets exercise the ladder.
                const tauli::ZeroCountModel m = tauli::catalog_dirichlet(100);
                return tauli::synthesize_zeros(m, 30.0 + 20.0 * rng.uniform01(), 0.0,
                                               1.5, 1.0, rng.next());
            }
            const double tau = 0.5 + 2.0 * rng.uniform01();
            const std::size_t k = 1 + static_cast<std::size_t>(rng.next() % 30);
            std::vector<std::complex<double>> zs;
            for (std::size_t j = 0; j < k; ++j) {
                const double re = rng.uniform01() * tau * 0.999;
                const double im = (rng.uniform01() - 0.5) * 80.0;
                zs.emplace_back(re, im);
                if (rng.next() & 1) zs.emplace_back(re, -im);  // conjugate pairs
            }
            zs.emplace_back(tau / 2.0, 14.0);  // one exactly-critical zero
            return tauli::ZeroSet(std::move(zs), tau);
        }();
        const tauli::OracleVerdict v = tauli::lambda1_check(zeros);
        if (!v.passed) note = v.note;
        return v.passed;
    });
}

SuiteResult suite_tail(std::uint64_t seed, long long trials, int jobs) {
    return run_trials("tail", trials, jobs, [seed](long long i, std::string& note) {
        SplitMix rng(trial_seed(seed, 3, (std::uint64_t)i));
        const tauli::ZeroCountModel m = tauli::catalog_dirichlet(100);
        const long long n = 3 + static_cast<long long>(rng.next() % 4);
        const double tn = static_cast<double>(n) * std::exp(1.0);
        const double height = 4.0 * tn * 1.15 + 5.0;
        const tauli::ZeroSet zeros =
            tauli::synthesize_zeros(m, height, 0.0, 1.5, 1.0, rng.next());
        const tauli::OracleVerdict v = tauli::tail_bound_check(zeros, m, n);
        if (!v.passed)
            note = "lhs " + tauli::format_g17(v.lhs) + " >= rhs " +
                   tauli::format_g17(v.rhs);
        if (!v.truncated) note += " (verdict not marked truncated)";
        return v.passed && v.truncated;
    });
}

SuiteResult suite_detector(std::uint64_t seed, long long trials_per_side, int jobs) {
    // Even trials carry no off-line zero; odd trials carry exactly one.
    return run_trials(
        "detector", 2 * trials_per_side, jobs, [seed](long long i, std::string& note) {
            SplitMix rng(trial_seed(seed, 4, (std::uint64_t)i));
            const bool off_line = (i % 2) == 1;
            const double tau = 1.0;

            tauli::ZeroCountModel m;
            m.a_f = (0.5 + rng.uniform01()) * 1e-3;
            m.b_f = -m.a_f * std::log(8.0 * std::exp(1.0) * tau);
            m.t0 = 1.0;
            m.c1 = 0.0;
            m.c2 = 2.0 + 0.5 * rng.uniform01();
            m.c3 = 0.0;
            const tauli::DyadicConstants d = tauli::derive_dyadic_constants(m);
            m.d1 = d.d1;
            m.d2 = d.d2;
            m.d3 = d.d3;

            const double r_value = 2.0 + rng.uniform01();
            const tauli::Radius r = tauli::Radius::from_value(r_value);
            const tauli::ThresholdReport rep = tauli::theorem3_N(m, tau, r);
            if (rep.n < 3 || rep.n > 200) {
                note = "toy threshold N=" + std::to_string(rep.n) +
                       " outside the desk-scale window";
                return false;
            }
            const double height =
                5.0 * static_cast<double>(rep.n) * std::exp(1.0) * tau + 1.0;
            tauli::ZeroSet base =
                tauli::synthesize_zeros(m, height, 0.0, 1.5, tau, rng.next());

            std::vector<std::complex<double>> zs = base.zeros();
            if (off_line) {
                const double r_off = r_value * (1.0 + 0.1 * rng.uniform01());
                const double denom = r_off * r_off - 1.0;
                const double center = tau * r_off * r_off / denom;
                const double radius = tau * r_off / denom;
                const double cap = tau / std::sqrt(denom);
                const double t = cap * (0.2 + 0.6 * rng.uniform01());
                const double sigma =
                    center - std::sqrt(radius * radius - t * t);
                zs.emplace_back(sigma, t);
                const double got = tauli::mobius_map({sigma, t}, tau).modulus;
                if (std::abs(got - r_off) > 1e-9 * r_off) {
                    note = "off-line placement modulus drifted";
                    return false;
                }
            }
            const tauli::ZeroSet zeros(std::move(zs), tau);
            const tauli::OracleVerdict v = tauli::detector_check(zeros, m, r);
            if (!v.passed)
                note = std::string(off_line ? "off-line" : "on-line") +
                       " configuration misclassified (N=" + std::to_string(rep.n) + ")";
            return v.passed;
        });
}

int cmd_verify(Format fmt, const std::string& suite, long long trials,
               std::uint64_t seed, int jobs) {
    std::vector<SuiteResult> results;
    const bool all = suite == "all";
    if (all || suite == "min20")
        results.push_back(suite_min20(seed, trials > 0 ? trials : 10000, jobs));
    if (all || suite == "tail")
        results.push_back(suite_tail(seed, trials > 0 ? trials : 25, jobs));
    if (all || suite == "detector")
        results.push_back(suite_detector(seed, trials > 0 ? trials : 100, jobs));
    if (all || suite == "lambda1")
        results.push_back(suite_lambda1(seed, trials > 0 ? trials : 200, jobs));
    if (results.empty())
        throw std::domain_error("--suite must be min20|tail|detector|lambda1|all");

    std::vector<Rec> recs;
    bool failed = false;
    for (const auto& r : results) {
        failed = failed || r.failures > 0;
        recs.push_back({label("suite", r.name), integer("trials", r.trials),
                        integer("failures", r.failures),
                        label("status", r.failures == 0 ? "PASS" : "FAIL")});
        for (const auto& n : r.notes) std::cerr << r.name << ": " << n << "\n";
    }
    emit_records(fmt, recs, std::cout);
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tau-Li coefficient zero-region toolkit"};
    app.require_subcommand(1);

    std::string format_text = "human";
    std::uint64_t seed = 12345;
    int jobs = 1;
    const auto add_globals = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_text, "human|csv|json-lines")
            ->check(CLI::IsMember({"human", "csv", "json-lines"}));
        cmd->add_option("--seed", seed, "base seed for randomized suites");
        cmd->add_option("--jobs", jobs, "worker threads for randomized suites")
            ->check(CLI::Range(1, 1024));
    };
    add_globals(&app);

    // constants
    auto* c_cmd = app.add_subcommand("constants",
                                     "print the derived constants of a model");
    ModelFlags c_model;
    c_model.attach(c_cmd);
    double c_tau = 1.0;
    c_cmd->add_option("--tau", c_tau, "tau > 1/e")->required();
    double c_t = 0.0;
    auto* c_t_opt = c_cmd->add_option("--T", c_t, "also evaluate K3 at height T");
    add_globals(c_cmd);

    // table
    auto* t_cmd = app.add_subcommand("table",
                                     "recompute a published table and diff it");
    int t_which = 0;
    t_cmd->add_option("which", t_which, "table number (1, 2 or 3)")
        ->required()
        ->check(CLI::Range(1, 3));
    add_globals(t_cmd);

    // thresholds
    auto* th_cmd = app.add_subcommand("thresholds",
                                      "index thresholds / admissible intervals");
    int th_theorem = 0;
    th_cmd->add_option("theorem", th_theorem, "criterion number (1, 2 or 3)")
        ->required()
        ->check(CLI::Range(1, 3));
    ModelFlags th_model;
    th_model.attach(th_cmd);
    double th_tau = 1.0;
    th_cmd->add_option("--tau", th_tau, "tau > 1/e")->required();
    std::string th_r;
    th_cmd->add_option("--R", th_r, "radius R > 1 (decimal literal, parsed exactly)")
        ->required();
    double th_t = 0.0;
    auto* th_t_opt = th_cmd->add_option("--T", th_t, "truncation height (criterion 2)");
    bool th_direct = false;
    th_cmd->add_flag("--direct", th_direct,
                     "scan the discriminant directly instead of the closed form");
    add_globals(th_cmd);

    // li
    auto* li_cmd = app.add_subcommand("li", "evaluate truncated coefficients");
    std::string li_zeros;
    li_cmd->add_option("--zeros", li_zeros, "zero file: one 're<TAB>im' per line")
        ->required();
    double li_tau = 1.0;
    li_cmd->add_option("--tau", li_tau, "tau > 0")->required();
    std::string li_n = "1";
    li_cmd->add_option("--n", li_n, "comma-separated indices, e.g. 1,2,3");
    add_globals(li_cmd);

    // region
    auto* rg_cmd = app.add_subcommand("region", "boundary curves as CSV");
    double rg_tau = 1.0;
    rg_cmd->add_option("--tau", rg_tau, "tau > 0")->required();
    std::string rg_r;
    rg_cmd->add_option("--R", rg_r, "radius R > 1")->required();
    long long rg_q = 0;
    auto* rg_q_opt =
        rg_cmd->add_option("--q", rg_q, "add comparison curves for modulus q");
    long long rg_samples = 512;
    rg_cmd->add_option("--samples", rg_samples, "points per curve (>= 2)")
        ->check(CLI::Range((long long)2, (long long)10000000));
    std::string rg_out;
    rg_cmd->add_option("--out", rg_out, "write curves to a file instead of stdout");
    add_globals(rg_cmd);

    // verify
    auto* v_cmd = app.add_subcommand("verify", "randomized verification suites");
    std::string v_suite = "all";
    v_cmd->add_option("--suite", v_suite, "min20|tail|detector|lambda1|all")
        ->check(CLI::IsMember({"min20", "tail", "detector", "lambda1", "all"}));
    long long v_trials = 0;
    v_cmd->add_option("--trials", v_trials, "trial count (0 = suite default)")
        ->check(CLI::Range((long long)0, (long long)100000000));
    add_globals(v_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format fmt = format_text == "csv"
                           ? Format::csv
                           : (format_text == "json-lines" ? Format::json_lines
                                                          : Format::human);
    try {
        if (c_cmd->parsed()) {
            std::optional<double> t;
            if (c_t_opt->count() > 0) t = c_t;
            return cmd_constants(fmt, c_model, c_tau, t);
        }
        if (t_cmd->parsed()) return cmd_table(fmt, t_which);
        if (th_cmd->parsed()) {
            std::optional<double> t;
            if (th_t_opt->count() > 0) t = th_t;
            return cmd_thresholds(fmt, th_theorem, th_model, th_tau, th_r, t,
                                  th_direct);
        }
        if (li_cmd->parsed()) return cmd_li(fmt, li_zeros, li_tau, li_n);
        if (rg_cmd->parsed()) {
            std::optional<long long> q;
            if (rg_q_opt->count() > 0) q = rg_q;
            return cmd_region(fmt, rg_tau, rg_r, q, rg_samples, rg_out);
        }
        if (v_cmd->parsed()) return cmd_verify(fmt, v_suite, v_trials, seed, jobs);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
