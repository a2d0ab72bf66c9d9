// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/lp.hpp"

#include <cmath>

namespace pwv {

namespace {

struct Tableau {
    // rows x cols, row-major; last column is the rhs.
    std::vector<double> a;
    int rows = 0, cols = 0;
    double& at(int r, int c) { return a[std::size_t(r) * std::size_t(cols) + std::size_t(c)]; }
};

} // namespace

LpResult lp_feasible(const LinearFeasibilityProblem& p) {
    LpResult res;
    auto check_row = [&](const LinRow& r) {
        for (auto [i, c] : r.terms)
            if (i < 0 || i >= p.nvars) return false;
        return true;
    };
    for (const auto& r : p.eq)
        if (!check_row(r)) {
            res.status = LpStatus::DimensionError;
            res.message = "equality row references variable outside [0, nvars)";
            return res;
        }
    for (const auto& r : p.le)
        if (!check_row(r)) {
            res.status = LpStatus::DimensionError;
            res.message = "inequality row references variable outside [0, nvars)";
            return res;
        }

    const int m = int(p.eq.size() + p.le.size());
    const int nslack = int(p.le.size());
    // Layout: structural | slack | artificial | rhs.
    const int nart = m;
    const int n = p.nvars + nslack + nart;
    Tableau t;
    t.rows = m + 1; // objective row last
    t.cols = n + 1;
    t.a.assign(std::size_t(t.rows) * std::size_t(t.cols), 0.0);

    std::vector<int> basis(std::size_t(m), -1);
    int row = 0;
    auto load = [&](const LinRow& r, int slack_idx) {
        double sign = r.rhs < 0 ? -1.0 : 1.0;
        for (auto [i, c] : r.terms) t.at(row, i) += sign * c;
        if (slack_idx >= 0) t.at(row, slack_idx) = sign * 1.0;
        t.at(row, n) = sign * r.rhs;
        ++row;
    };
    for (const auto& r : p.eq) load(r, -1);
    for (std::size_t i = 0; i < p.le.size(); ++i) load(p.le[i], p.nvars + int(i));

    // Slack columns with +1 coefficient can serve as the initial basis for
    // their row; otherwise add an artificial variable.
    int next_art = p.nvars + nslack;
    for (int r = 0; r < m; ++r) {
        int slack_col = -1;
        if (r >= int(p.eq.size())) {
            int c = p.nvars + (r - int(p.eq.size()));
            if (t.at(r, c) > 0.5) slack_col = c;
        }
        if (slack_col >= 0) {
            basis[std::size_t(r)] = slack_col;
        } else {
            int c = next_art++;
            t.at(r, c) = 1.0;
            basis[std::size_t(r)] = c;
        }
    }

    // Objective: minimize the sum of artificial variables. Stored as the
    // reduced-cost row; artificials start basic, so subtract their rows.
    for (int c = p.nvars + nslack; c < n; ++c) t.at(m, c) = 1.0;
    for (int r = 0; r < m; ++r) {
        if (basis[std::size_t(r)] >= p.nvars + nslack) {
            for (int c = 0; c <= n; ++c) t.at(m, c) -= t.at(r, c);
        }
    }

    const long long max_iters = 2000 + 50LL * (static_cast<long long>(m) + n);
    long long iters = 0;
    while (true) {
        if (++iters > max_iters) {
            res.status = LpStatus::IterationLimit;
            res.phase1_gap = -t.at(m, n);
            res.message = "simplex iteration limit exceeded";
            return res;
        }
        // Bland's rule: first column with negative reduced cost.
        int pivot_col = -1;
        for (int c = 0; c < n; ++c) {
            if (t.at(m, c) < -kLpTolerance) {
                pivot_col = c;
                break;
            }
        }
        if (pivot_col < 0) break; // optimal
        int pivot_row = -1;
        double best = 0.0;
        for (int r = 0; r < m; ++r) {
            double a = t.at(r, pivot_col);
            if (a > kLpTolerance) {
                double ratio = t.at(r, n) / a;
                if (pivot_row < 0 || ratio < best - 1e-15 ||
                    (std::abs(ratio - best) <= 1e-15 &&
                     basis[std::size_t(r)] < basis[std::size_t(pivot_row)])) {
                    pivot_row = r;
                    best = ratio;
                }
            }
        }
        if (pivot_row < 0) break; // unbounded below cannot happen for phase 1
        // Pivot.
        double piv = t.at(pivot_row, pivot_col);
        for (int c = 0; c <= n; ++c) t.at(pivot_row, c) /= piv;
        for (int r = 0; r <= m; ++r) {
            if (r == pivot_row) continue;
            double f = t.at(r, pivot_col);
            if (f == 0.0) continue;
            for (int c = 0; c <= n; ++c) t.at(r, c) -= f * t.at(pivot_row, c);
        }
        basis[std::size_t(pivot_row)] = pivot_col;
    }

    double objective = -t.at(m, n); // row holds -(current objective)
    if (objective > kLpTolerance) {
        res.status = LpStatus::Infeasible;
        res.phase1_gap = objective;
        res.message = "phase-1 objective gap " + std::to_string(objective);
        return res;
    }

    res.status = LpStatus::Feasible;
    res.x.assign(std::size_t(p.nvars), 0.0);
    for (int r = 0; r < m; ++r) {
        int b = basis[std::size_t(r)];
        if (b < p.nvars) res.x[std::size_t(b)] = t.at(r, n);
    }
    return res;
}

} // namespace pwv
