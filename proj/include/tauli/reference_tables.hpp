#pragma once

#include <string>
#include <vector>

#include "tauli/thresholds.hpp"

namespace tauli {

// Published reference rows for the three result tables, keyed by the inputs
// (tau, R as an exact offset from 1, and the height T where applicable).
// Table 1: index thresholds for the Dirichlet q=100 family.
struct Table1Row {
    double tau;
    long double r_offset;
    const char* r_label;
    long long n_region;    // zero-region criterion N
    long long grid_max;    // 5 N^2 (A_F log N + M_F), floored
    long long n_detector;  // single-zero detector N
};

// Table 2: admissible [n0, n1] from the direct scan, Dirichlet q=100.
struct Table2Row {
    double t_height;
    double tau;
    long double r_offset;
    const char* r_label;
    long long n0;
    long long n1;
};

// Table 3: detector N for the level-1 weight-12 newform family.
struct Table3Row {
    double tau;
    long double r_offset;
    const char* r_label;
    long long n_detector;
};

const std::vector<Table1Row>& table1_expected();
const std::vector<Table2Row>& table2_expected();
const std::vector<Table3Row>& table3_expected();

// Recomputed values for a row (same key fields, computed result columns).
Table1Row table1_recompute(const Table1Row& row);
Table2Row table2_recompute(const Table2Row& row);
Table3Row table3_recompute(const Table3Row& row);

struct TableDiff {
    int table;          // 1, 2 or 3
    std::size_t row;    // 0-based
    std::string column;
    long long expected;
    long long computed;
};

// Empty when every recomputed value matches the published one.
std::vector<TableDiff> diff_table(int which);

}  // namespace tauli
