#pragma once

#include <string>

#include "kummerws/curve.hpp"
#include "kummerws/types.hpp"

// Formula-vs-oracle sweep: for every admissible parameter triple in range
// and every tuple shape up to the length limit, the closed-form gap lists
// and generating sets must coincide exactly with the brute-force oracle.
namespace kummerws {

struct SweepBounds {
    Int max_r = 7;
    Int max_m = 7;
    std::vector<Int> lambdas = {1};
    int max_total_length = 4;
};

struct SweepCase {
    Int r = 0;
    Int m = 0;
    Int lambda = 0;
    std::string label;
    bool pass = false;
    std::string detail;  // empty on pass
};

// All validated parameter triples with 3 <= r <= max_r, 2 <= m <= max_m and
// lambda drawn from the given list, ordered by (r, m, lambda).
std::vector<CurveParams> admissible_params(Int max_r, Int max_m, const std::vector<Int>& lambdas);

// Runs every case, optionally fanning out across worker threads. Results
// come back in a fixed case order regardless of the worker count.
std::vector<SweepCase> verify_sweep(const SweepBounds& bounds, int jobs = 1);

bool all_passed(const std::vector<SweepCase>& cases);

}  // namespace kummerws
