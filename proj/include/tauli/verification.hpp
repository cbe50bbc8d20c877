#pragma once

#include <complex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tauli/thresholds.hpp"
#include "tauli/zero_model.hpp"

namespace tauli {

// Outcome of one brute-force property check.
struct OracleVerdict {
    std::string property;
    bool has_witness = false;
    long long witness_n = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool passed = false;
    bool truncated = false;  // finite data standing in for an infinite sum
    std::string note;
};

// Renormalizes the points so max |z_j| = 1 exactly, then maximizes
// Re(sum z_j^n) over n in [1, 5M].  The turning-point lemma guarantees the
// maximum is >= 1/20.  Throws std::length_error when M exceeds the guard.
std::pair<long long, double> min20_witness(std::vector<std::complex<double>> points,
                                           std::size_t max_m = 12);

// Compares |window sum over T(n) < |Im| <= max height| against K1 n log n,
// T(n) = n e tau.  Requires n >= 3, n >= T0/(e tau), and data reaching
// 4 T(n) ("insufficient height" otherwise).  The verdict is marked
// truncated: the bound is for the infinite tail.
OracleVerdict tail_bound_check(const ZeroSet& zeros, const ZeroCountModel& m,
                               long long n);

// Searches the index grid of the zero-region criterion for an n whose
// height-restricted coefficient drops below count - R^n/20.  Returns the
// first such (n, lhs, rhs); absent when no zero reaches modulus R (the
// hypothesis fails) or no grid point witnesses.  Throws std::length_error
// when the grid exceeds `grid_guard`.
std::optional<std::tuple<long long, double, double>> theorem_smallzeros_witness(
    const ZeroSet& zeros, const ZeroCountModel& m, double r_value,
    long long grid_guard = 1000000);

// Single-zero detector: scans n in {N..5N} for |Re lambda| >= (K1+K4) n log n
// and passes iff a trip happens exactly when the set has an off-line zero.
// Requires at most one zero with |rho/(rho-tau)| > 1.
OracleVerdict detector_check(const ZeroSet& zeros, const ZeroCountModel& m,
                             const Radius& r);

// n = 1 sanity: every term's real part is >= 0 and matches the closed form
// tau (tau - Re rho)/|rho - tau|^2 to 1e-12.
OracleVerdict lambda1_check(const ZeroSet& zeros);

}  // namespace tauli
