#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tauli {

// Zero-counting envelope for an L-function: N(T) is approximated by
// a_f*T*log(T) + b_f*T with symmetric-window error constants c1..c3 and
// dyadic-window error constants d1..d3, valid for T >= t0.
struct ZeroCountModel {
    double a_f = 0.0;
    double b_f = 0.0;
    double t0 = 1.0;
    // |N(T) - (a_f T log T + b_f T)| <= c1 log T + c2 + c3/T
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    // N(T, 2T) <= a_f T log(4T) + b_f T + d1 log T + d2 + d3/T
    double d1 = 0.0, d2 = 0.0, d3 = 0.0;

    // Throws std::invalid_argument on hard violations (a_f <= 0, t0 <= 0,
    // negative error constants).
    void validate() const;

    // Soft consistency checks between the dyadic and symmetric constants
    // (d1 <= 2c1, d2 <= 2c2 + c1 log 2, d3 <= 1.5 c3).  Violations are
    // reported as human-readable warnings, never errors: user-supplied
    // envelopes may be sharper than the derived ones.
    std::vector<std::string> consistency_warnings() const;
};

struct NewformCatalog {
    ZeroCountModel model;
    long long known_count_at_27 = 0;
};

// Primitive non-principal Dirichlet character modulo q (q >= 3).
ZeroCountModel catalog_dirichlet(long long q);
// Holomorphic newform of level 1 and weight 12; the catalog also carries the
// externally known zero count up to height 27.
NewformCatalog catalog_newform();

struct DyadicConstants {
    double d1 = 0.0, d2 = 0.0, d3 = 0.0;
};
// Dyadic constants implied by the symmetric ones:
// d1 = 2c1, d2 = 2c2 + c1 log 2, d3 = 1.5 c3.
DyadicConstants derive_dyadic_constants(const ZeroCountModel& m);

// Main term a_f T log T + b_f T and the envelope around it.  All require
// T >= t0 (throws std::domain_error below).
double count_main(const ZeroCountModel& m, double t);
double count_upper(const ZeroCountModel& m, double t);
double count_lower(const ZeroCountModel& m, double t);  // clamped at 0
// Upper envelope for the window (T, 2T].
double dyadic_count_upper(const ZeroCountModel& m, double t);
// Integer zero-count estimate used wherever a whole number of zeros is
// required: floor of the upper envelope, clamped at 0.
long long count_estimate_integer(const ZeroCountModel& m, double t);

// A finite multiset of zeros in the strip 0 <= Re(rho) <= tau, closed under
// nothing (conjugates are stored explicitly), ordered by (Im, Re).
class ZeroSet {
public:
    ZeroSet(std::vector<std::complex<double>> zeros, double tau);

    const std::vector<std::complex<double>>& zeros() const { return zeros_; }
    double tau() const { return tau_; }
    std::size_t size() const { return zeros_.size(); }

    // Number of stored zeros with |Im| <= t.
    std::size_t count_below(double t) const;

    // One "re<TAB>im" line per zero, 17 significant digits.
    void serialize(std::ostream& os) const;

private:
    std::vector<std::complex<double>> zeros_;
    double tau_;
};

// Parses "re<TAB>im" lines ('#' comments and blank lines ignored); throws
// std::runtime_error with a 1-based line number on malformed input or on a
// zero outside the strip.
ZeroSet load_zeros(std::istream& is, double tau);

// Key=value model file with keys A_F, B_F, T0, C1, C2, C3 and optionally
// c1, c2, c3 (derived via derive_dyadic_constants when absent).  '#' starts
// a comment.  Throws std::runtime_error naming the offending line.  Soft
// consistency warnings, if any, are appended to *warnings.
ZeroCountModel load_model(std::istream& is, std::vector<std::string>* warnings = nullptr);

// Deterministically generates a zero multiset whose counting function tracks
// the model's main term within the envelope for every height.  A fraction of
// the conjugate pairs (rounded down) is pushed off the critical line onto the
// boundary circle |rho/(rho-tau)| = r_off.  Throws std::runtime_error when
// the envelope is too tight to absorb the placement or the off-line request
// is geometrically infeasible below `height`.
ZeroSet synthesize_zeros(const ZeroCountModel& m, double height,
                         double fraction_off_line, double r_off, double tau,
                         std::uint64_t seed);

}  // namespace tauli
