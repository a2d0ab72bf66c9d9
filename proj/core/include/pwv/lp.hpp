// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pwv {

// Sparse row: sum_i coeff_i * x_{idx_i}  (= | <=)  rhs, with all variables
// implicitly >= 0.
struct LinRow {
    std::vector<std::pair<int, double>> terms;
    double rhs = 0.0;
};

struct LinearFeasibilityProblem {
    int nvars = 0;
    std::vector<LinRow> eq;
    std::vector<LinRow> le;
};

enum class LpStatus { Feasible, Infeasible, IterationLimit, DimensionError };

struct LpResult {
    LpStatus status = LpStatus::DimensionError;
    std::vector<double> x;   // a feasible point when status == Feasible
    double phase1_gap = 0.0; // residual infeasibility otherwise
    std::string message;
};

// Phase-1 simplex (Bland's rule) minimizing total artificial mass; feasible
// iff the optimum is ~0 (tolerance 1e-8).
LpResult lp_feasible(const LinearFeasibilityProblem& p);

inline constexpr double kLpTolerance = 1e-8;

} // namespace pwv
