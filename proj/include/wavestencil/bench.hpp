#pragma once

// Published standing-wave error tables and a runner that recomputes them.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "scheme.hpp"
#include "simulator.hpp"

namespace wavestencil {

struct BenchRowSpec {
    std::size_t n;
    std::size_t n_t;
    double lambda;
    double ref_poisson;
    double ref_conventional;
};

struct BenchTableSpec {
    int number;
    std::string poisson_scheme;
    std::string conventional_scheme;
    BoundaryCondition bc;
    std::vector<BenchRowSpec> rows;
};

// Values as printed: Table 1 (five-point, Dirichlet), Table 2 (nine-point,
// Dirichlet, n_t = n), Table 3 (13-point, periodic, n_t = n).
inline const std::vector<BenchTableSpec>& reference_tables() {
    static const std::vector<BenchTableSpec> tables{
        {1, "P5", "C5", BoundaryCondition::Dirichlet,
         {
             {10, 1, 0.707, 9.0843e-4, 6.8938e-2},    // table 1, row 1
             {10, 10, 0.707, 9.1540e-4, 6.8945e-2},   // row 2
             {10, 20, 0.707, 9.1604e-4, 6.8945e-2},   // row 3
             {20, 1, 0.707, 5.4767e-5, 1.6636e-2},    // row 4
             {20, 20, 0.707, 5.6800e-5, 1.6638e-2},   // row 5
             {20, 40, 0.707, 5.7372e-5, 1.6638e-2},   // row 6
             {40, 1, 0.707, 3.3924e-6, 4.1230e-3},    // row 7
             {40, 40, 0.707, 4.0331e-6, 4.1234e-3},   // row 8
             {40, 80, 0.707, 4.4928e-6, 4.1234e-3},   // row 9
             {80, 1, 0.707, 2.1158e-7, 1.0285e-3},    // row 10
             {80, 80, 0.707, 4.3820e-7, 1.0286e-3},   // row 11
             {80, 160, 0.707, 6.5824e-7, 1.0286e-3},  // row 12
         }},
        {2, "P9", "C9", BoundaryCondition::Dirichlet,
         {
             {10, 10, 0.707, 3.7058e-2, 1.1741e-1},  // table 2, row 1
             {10, 10, 0.796, 2.9587e-2, 1.1241e-1},  // row 2
             {20, 20, 0.707, 8.9333e-3, 2.8002e-2},  // row 3
             {20, 20, 0.796, 8.0697e-3, 2.7523e-2},  // row 4
             {40, 40, 0.707, 2.3723e-3, 6.8821e-3},  // row 5
             {40, 40, 0.796, 2.5737e-3, 6.8668e-3},  // row 6
             {80, 80, 0.707, 7.5573e-4, 1.7084e-3},  // row 7
             {80, 80, 0.796, 1.0274e-3, 1.7187e-3},  // row 8
         }},
        {3, "P13", "C13", BoundaryCondition::Periodic,
         {
             {10, 10, 0.707, 4.2146e-5, 6.8938e-2},   // table 3, row 1
             {20, 20, 0.707, 6.6004e-7, 1.6636e-2},   // row 2
             {40, 40, 0.707, 1.1471e-8, 4.1230e-3},   // row 3
             {80, 80, 0.707, 2.8884e-10, 1.0285e-3},  // row 4
         }},
    };
    return tables;
}

inline const BenchTableSpec& reference_table(int number) {
    for (const auto& t : reference_tables())
        if (t.number == number) return t;
    throw DomainError("no reference table " + std::to_string(number) + " (expected 1, 2 or 3)");
}

struct BenchRowResult {
    BenchRowSpec spec;
    double poisson = 0.0;
    double conventional = 0.0;

    double poisson_deviation() const { return poisson / spec.ref_poisson - 1.0; }
    double conventional_deviation() const { return conventional / spec.ref_conventional - 1.0; }
};

struct BenchResult {
    const BenchTableSpec* table = nullptr;
    std::vector<BenchRowResult> rows;
};

inline BenchResult run_bench(int number) {
    const BenchTableSpec& table = reference_table(number);
    const SchemeSpec poisson = named_scheme(table.poisson_scheme);
    const SchemeSpec conventional = named_scheme(table.conventional_scheme);
    BenchResult result{&table, {}};
    for (const auto& row : table.rows) {
        BenchRowResult r{row};
        r.poisson = run(SimConfig::standing_wave(poisson, row.n, row.n_t, row.lambda, table.bc)).error;
        r.conventional = run(SimConfig::standing_wave(conventional, row.n, row.n_t, row.lambda, table.bc)).error;
        result.rows.push_back(r);
    }
    return result;
}

}  // namespace wavestencil
