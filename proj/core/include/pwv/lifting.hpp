// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pwv/distribution.hpp"
#include "pwv/lp.hpp"

#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace pwv {

// A relation over values, evaluated lazily over a finite window. The witness
// search window for pair coordinates is the union of both supports plus the
// relation's declared reach (extra1/extra2): a shift relation, for example,
// relates support values to values outside either support, and those
// coordinates must be available to the witnesses.
template <class V>
struct RelationOn {
    std::function<bool(const V&, const V&)> contains;
    std::vector<V> extra1, extra2;
};

template <class V>
struct LiftingWitness {
    PairDistribution<V, V> muL, muR;
};

enum class LiftStatus { Feasible, Infeasible, WindowOverflow, SolverLimit };

template <class V>
struct LiftResult {
    LiftStatus status = LiftStatus::Infeasible;
    std::optional<LiftingWitness<V>> witness;
    double phase1_gap = 0.0;
    std::size_t window_size = 0;

    bool feasible() const { return status == LiftStatus::Feasible; }
};

inline constexpr std::size_t kMaxLiftWindow = 100000;

namespace detail {

template <class V>
std::vector<V> lift_window(const SubDistribution<V>& mu1, const SubDistribution<V>& mu2,
                           const std::vector<V>& extra) {
    std::set<V> w;
    for (const auto& [v, x] : mu1.entries()) w.insert(v);
    for (const auto& [v, x] : mu2.entries()) w.insert(v);
    for (const V& v : extra) w.insert(v);
    return std::vector<V>(w.begin(), w.end());
}

} // namespace detail

// Exact lifting: a single coupling mu with both marginals pinned and
// supp(mu) inside the relation. Witness coordinates never leave the two
// supports because both marginals are fixed.
template <class V>
LiftResult<V> exact_lifting(const SubDistribution<V>& mu1, const SubDistribution<V>& mu2,
                            const RelationOn<V>& rel) {
    LiftResult<V> res;
    if (mu1.empty() && mu2.empty()) {
        res.status = LiftStatus::Feasible;
        res.witness = LiftingWitness<V>{};
        return res;
    }
    struct PairVar {
        std::size_t i, j;
    };
    std::vector<PairVar> vars;
    const auto& e1 = mu1.entries();
    const auto& e2 = mu2.entries();
    for (std::size_t i = 0; i < e1.size(); ++i)
        for (std::size_t j = 0; j < e2.size(); ++j)
            if (rel.contains(e1[i].first, e2[j].first)) vars.push_back({i, j});
    res.window_size = vars.size();

    LinearFeasibilityProblem lp;
    lp.nvars = int(vars.size());
    std::vector<LinRow> rows1(e1.size()), rows2(e2.size());
    for (std::size_t k = 0; k < vars.size(); ++k) {
        rows1[vars[k].i].terms.emplace_back(int(k), 1.0);
        rows2[vars[k].j].terms.emplace_back(int(k), 1.0);
    }
    for (std::size_t i = 0; i < e1.size(); ++i) {
        rows1[i].rhs = e1[i].second;
        if (rows1[i].terms.empty()) return res; // value with no related partner
        lp.eq.push_back(std::move(rows1[i]));
    }
    for (std::size_t j = 0; j < e2.size(); ++j) {
        rows2[j].rhs = e2[j].second;
        if (rows2[j].terms.empty()) return res;
        lp.eq.push_back(std::move(rows2[j]));
    }
    LpResult r = lp_feasible(lp);
    if (r.status == LpStatus::IterationLimit) {
        res.status = LiftStatus::SolverLimit;
        return res;
    }
    if (r.status != LpStatus::Feasible) {
        res.phase1_gap = r.phase1_gap;
        return res;
    }
    std::vector<typename PairDistribution<V, V>::Entry> ws;
    for (std::size_t k = 0; k < vars.size(); ++k)
        if (r.x[k] > 0)
            ws.emplace_back(std::make_pair(e1[vars[k].i].first, e2[vars[k].j].first), r.x[k]);
    LiftingWitness<V> w;
    w.muL = PairDistribution<V, V>::from_weights(std::move(ws));
    w.muR = w.muL;
    res.status = LiftStatus::Feasible;
    res.witness = std::move(w);
    return res;
}

// Approximate (eps, delta)-lifting: two witnesses muL, muR supported inside
// the relation with pi1(muL)=mu1, pi2(muR)=mu2 and a linearized divergence
// constraint: one slack s_p >= muL(p) - e^eps*muR(p) per pair carrying muL
// mass, with sum s <= delta.
template <class V>
LiftResult<V> approx_lifting(const SubDistribution<V>& mu1, const SubDistribution<V>& mu2,
                             const RelationOn<V>& rel, double eps, double delta) {
    if (eps < 0 || delta < 0)
        throw std::invalid_argument("approx_lifting: eps and delta must be >= 0");
    LiftResult<V> res;
    if (mu1.empty() && mu2.empty()) {
        res.status = LiftStatus::Feasible;
        res.witness = LiftingWitness<V>{};
        return res;
    }
    std::vector<V> w1 = detail::lift_window(mu1, mu2, rel.extra1);
    std::vector<V> w2 = detail::lift_window(mu1, mu2, rel.extra2);
    if (w1.size() * w2.size() > kMaxLiftWindow * 16) {
        res.status = LiftStatus::WindowOverflow;
        return res;
    }

    const auto& e1 = mu1.entries();
    const auto& e2 = mu2.entries();
    struct PairKey {
        V a, b;
        int muL = -1, muR = -1, slack = -1;
    };
    std::vector<PairKey> pairs;
    std::map<std::pair<V, V>, std::size_t> pair_idx;
    auto touch = [&](const V& a, const V& b) -> PairKey& {
        auto key = std::make_pair(a, b);
        auto it = pair_idx.find(key);
        if (it == pair_idx.end()) {
            it = pair_idx.emplace(key, pairs.size()).first;
            pairs.push_back(PairKey{a, b, -1, -1, -1});
        }
        return pairs[it->second];
    };
    int nvars = 0;
    for (const auto& [a, wa] : e1)
        for (const V& b : w2)
            if (rel.contains(a, b)) {
                PairKey& p = touch(a, b);
                p.muL = nvars++;
                p.slack = nvars++;
            }
    for (const auto& [b, wb] : e2)
        for (const V& a : w1)
            if (rel.contains(a, b)) {
                PairKey& p = touch(a, b);
                p.muR = nvars++;
            }
    res.window_size = pairs.size();
    if (pairs.size() > kMaxLiftWindow) {
        res.status = LiftStatus::WindowOverflow;
        return res;
    }

    LinearFeasibilityProblem lp;
    lp.nvars = nvars;
    // pi1(muL) = mu1
    std::map<V, LinRow> m1rows, m2rows;
    for (const PairKey& p : pairs) {
        if (p.muL >= 0) m1rows[p.a].terms.emplace_back(p.muL, 1.0);
        if (p.muR >= 0) m2rows[p.b].terms.emplace_back(p.muR, 1.0);
    }
    for (const auto& [a, wa] : e1) {
        auto it = m1rows.find(a);
        if (it == m1rows.end()) return res; // no related partner for a
        it->second.rhs = wa;
        lp.eq.push_back(std::move(it->second));
    }
    for (const auto& [b, wb] : e2) {
        auto it = m2rows.find(b);
        if (it == m2rows.end()) return res;
        it->second.rhs = wb;
        lp.eq.push_back(std::move(it->second));
    }
    // Divergence linearization.
    double escale = std::exp(eps);
    LinRow total_slack;
    for (const PairKey& p : pairs) {
        if (p.muL < 0) continue;
        LinRow r;
        r.terms.emplace_back(p.muL, 1.0);
        if (p.muR >= 0) r.terms.emplace_back(p.muR, -escale);
        r.terms.emplace_back(p.slack, -1.0);
        r.rhs = 0.0;
        lp.le.push_back(std::move(r));
        total_slack.terms.emplace_back(p.slack, 1.0);
    }
    total_slack.rhs = delta;
    lp.le.push_back(std::move(total_slack));

    LpResult r = lp_feasible(lp);
    if (r.status == LpStatus::IterationLimit) {
        res.status = LiftStatus::SolverLimit;
        return res;
    }
    if (r.status != LpStatus::Feasible) {
        res.phase1_gap = r.phase1_gap;
        return res;
    }
    std::vector<typename PairDistribution<V, V>::Entry> wl, wr;
    for (const PairKey& p : pairs) {
        if (p.muL >= 0 && r.x[std::size_t(p.muL)] > 0)
            wl.emplace_back(std::make_pair(p.a, p.b), r.x[std::size_t(p.muL)]);
        if (p.muR >= 0 && r.x[std::size_t(p.muR)] > 0)
            wr.emplace_back(std::make_pair(p.a, p.b), r.x[std::size_t(p.muR)]);
    }
    LiftingWitness<V> w;
    w.muL = PairDistribution<V, V>::from_weights(std::move(wl));
    w.muR = PairDistribution<V, V>::from_weights(std::move(wr));
    res.status = LiftStatus::Feasible;
    res.witness = std::move(w);
    return res;
}

struct WitnessReport {
    bool marginal1_ok = false, marginal2_ok = false;
    bool support_ok = false;
    bool divergence_ok = false;
    double marginal1_residual = 0.0, marginal2_residual = 0.0;
    double divergence = 0.0;

    bool ok() const { return marginal1_ok && marginal2_ok && support_ok && divergence_ok; }
    std::string str() const {
        std::ostringstream os;
        os << "marginal1 " << (marginal1_ok ? "ok" : "FAIL") << " (residual "
           << marginal1_residual << "), marginal2 " << (marginal2_ok ? "ok" : "FAIL")
           << " (residual " << marginal2_residual << "), support "
           << (support_ok ? "ok" : "FAIL") << ", divergence " << divergence
           << (divergence_ok ? " ok" : " FAIL");
        return os.str();
    }
};

inline constexpr double kWitnessTolerance = 1e-7;

template <class V>
WitnessReport check_witness(const SubDistribution<V>& mu1, const SubDistribution<V>& mu2,
                            const RelationOn<V>& rel, double eps, double delta,
                            const LiftingWitness<V>& w) {
    WitnessReport rep;
    auto residual = [](const SubDistribution<V>& a, const SubDistribution<V>& b) {
        double r = 0.0;
        for (const auto& [v, x] : a.entries()) r = std::max(r, std::abs(x - b.weight(v)));
        for (const auto& [v, x] : b.entries()) r = std::max(r, std::abs(x - a.weight(v)));
        return r;
    };
    rep.marginal1_residual = residual(marginal1(w.muL), mu1);
    rep.marginal2_residual = residual(marginal2(w.muR), mu2);
    rep.marginal1_ok = rep.marginal1_residual <= kWitnessTolerance;
    rep.marginal2_ok = rep.marginal2_residual <= kWitnessTolerance;
    rep.support_ok = true;
    for (const auto& [pr, x] : w.muL.entries())
        if (!rel.contains(pr.first, pr.second)) rep.support_ok = false;
    for (const auto& [pr, x] : w.muR.entries())
        if (!rel.contains(pr.first, pr.second)) rep.support_ok = false;
    rep.divergence = dp_divergence(w.muL, w.muR, eps);
    rep.divergence_ok = rep.divergence <= delta + kWitnessTolerance;
    return rep;
}

// Cross-check of Prop imp:epsdel: a feasible lifting of the implication
// relation entails Pr1[E1] <= e^eps Pr2[E2] + delta.
template <class V>
bool event_bound_check(const SubDistribution<V>& mu1, const SubDistribution<V>& mu2,
                       const std::function<bool(const V&)>& e1,
                       const std::function<bool(const V&)>& e2, double eps, double delta) {
    return mu1.prob(e1) <= std::exp(eps) * mu2.prob(e2) + delta + 1e-9;
}

// Prop pw:eq: full distributions are equal iff every pointwise implication
// relation {x1 = b => x2 = b} admits an exact lifting.
template <class V>
bool pointwise_equality(const SubDistribution<V>& mu1, const SubDistribution<V>& mu2) {
    if (!mu1.is_full() || !mu2.is_full())
        throw std::invalid_argument("pointwise_equality requires full distributions");
    std::set<V> values;
    for (const auto& [v, w] : mu1.entries()) values.insert(v);
    for (const auto& [v, w] : mu2.entries()) values.insert(v);
    for (const V& b : values) {
        RelationOn<V> rel;
        rel.contains = [&b](const V& x1, const V& x2) { return !(x1 == b) || x2 == b; };
        if (!exact_lifting(mu1, mu2, rel).feasible()) return false;
    }
    return true;
}

// Bisection utility over the feasibility oracle: least delta (within tol)
// making the (eps, delta)-lifting feasible.
double min_feasible_delta(const IntDist& mu1, const IntDist& mu2,
                          const RelationOn<std::int64_t>& rel, double eps, double tol = 1e-9);

// Built-in integer relations (with window reach where needed).
RelationOn<std::int64_t> rel_eq();
RelationOn<std::int64_t> rel_shift(std::int64_t k, const IntDist& mu1, const IntDist& mu2);
RelationOn<std::int64_t> rel_diff(std::int64_t c, const IntDist& mu1, const IntDist& mu2);
RelationOn<std::int64_t> rel_impl(std::int64_t b);
RelationOn<std::int64_t> rel_pairs(std::vector<std::pair<std::int64_t, std::int64_t>> pairs);

// Parses "eq", "shift:k", "diff:c", "impl:b"; explicit pair lists come from
// files handled by the CLI.
RelationOn<std::int64_t> parse_relation(const std::string& spec, const IntDist& mu1,
                                        const IntDist& mu2);

} // namespace pwv
