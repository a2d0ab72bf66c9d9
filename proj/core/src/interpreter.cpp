// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/interpreter.hpp"

#include "pwv/eval.hpp"

#include <map>
#include <tuple>

namespace pwv {

std::int64_t RadiusPolicy::radius_for(double scale_eps) const {
    if (fixed) return *fixed;
    return radius_for_tolerance(scale_eps, auto_tol);
}

namespace {

struct Ctx {
    const DeclTable* decls;
    const InterpConfig* cfg;
    double truncation_budget = 0.0;
    double dropped_loop_mass = 0.0;
    Memory canonical;
    // Sampler cache keyed by (one_sided, center, scale index). Scales come
    // from a tiny set per program, so an exact double key is fine.
    std::map<std::tuple<bool, std::int64_t, double>, IntDist> samplers;

    const IntDist& sampler(bool one_sided, std::int64_t center, double scale) {
        auto key = std::make_tuple(one_sided, center, scale);
        auto it = samplers.find(key);
        if (it != samplers.end()) return it->second;
        std::int64_t r = cfg->radius.radius_for(scale);
        IntDist d = one_sided ? truncated_oslaplace(center, scale, r)
                              : truncated_laplace(center, scale, r);
        return samplers.emplace(key, std::move(d)).first->second;
    }

    double sampler_tail(bool one_sided, double scale) const {
        std::int64_t r = cfg->radius.radius_for(scale);
        return one_sided ? os_tail_mass(scale, r) : tail_mass(scale, r);
    }
};

MemDist collapse(const MemDist& d, const VarSet& live, const Ctx& ctx) {
    std::map<Memory, double> acc;
    for (const auto& [m, w] : d.entries()) {
        Memory q = m;
        for (std::size_t i = 0; i < ctx.decls->size(); ++i)
            if (!live.count(ctx.decls->at(i).name)) q.slots[i] = ctx.canonical.slots[i];
        acc[std::move(q)] += w;
    }
    MemDist out;
    for (auto& [m, w] : acc) out.mutable_entries().emplace_back(m, w);
    if (d.is_full()) out.set_full();
    return out;
}

MemDist run(const Command& c, MemDist in, const VarSet& live_after, Ctx& ctx) {
    if (in.empty()) return in;
    switch (c.kind) {
        case CmdKind::Skip: return in;
        case CmdKind::Assign: {
            int idx = ctx.decls->index_of(c.var);
            std::map<Memory, double> acc;
            for (const auto& [m, w] : in.entries()) {
                Memory q = m;
                q.slots[std::size_t(idx)] = eval_expr(*c.expr, m);
                acc[std::move(q)] += w;
            }
            MemDist out;
            for (auto& [m, w] : acc) out.mutable_entries().emplace_back(m, w);
            if (in.is_full()) out.set_full();
            return out;
        }
        case CmdKind::SampleLap:
        case CmdKind::SampleOsLap: {
            bool one_sided = c.kind == CmdKind::SampleOsLap;
            double scale = c.scale.to_double() * ctx.cfg->eps_value;
            int idx = ctx.decls->index_of(c.var);
            double tail = ctx.sampler_tail(one_sided, scale);
            std::map<Memory, double> acc;
            for (const auto& [m, w] : in.entries()) {
                std::int64_t center = eval_int(*c.expr, m);
                ctx.truncation_budget += 2.0 * tail * w;
                const IntDist& noise = ctx.sampler(one_sided, center, scale);
                Memory q = m;
                for (const auto& [v, wv] : noise.entries()) {
                    q.slots[std::size_t(idx)] = v;
                    acc[q] += w * wv;
                }
            }
            MemDist out;
            for (auto& [m, w] : acc) out.mutable_entries().emplace_back(m, w);
            if (in.is_full()) out.set_full();
            return out;
        }
        case CmdKind::Seq: {
            VarSet mid = live_before(*c.c2, live_after);
            MemDist d1 = run(*c.c1, std::move(in), mid, ctx);
            return run(*c.c2, std::move(d1), live_after, ctx);
        }
        case CmdKind::If: {
            std::vector<MemDist::Entry> then_in, else_in;
            for (const auto& [m, w] : in.entries())
                (eval_bool(*c.expr, m) ? then_in : else_in).emplace_back(m, w);
            MemDist dt = run(*c.c1, MemDist::from_weights(std::move(then_in)), live_after, ctx);
            MemDist de = run(*c.c2, MemDist::from_weights(std::move(else_in)), live_after, ctx);
            std::vector<MemDist::Entry> merged(dt.entries());
            merged.insert(merged.end(), de.entries().begin(), de.entries().end());
            MemDist out = MemDist::from_weights(std::move(merged));
            if (in.is_full() && std::abs(out.mass() - 1.0) <= kMassTolerance) out.set_full();
            return out;
        }
        case CmdKind::While: {
            VarSet live_loop = live_before(c, live_after);
            MemDist cur = collapse(in, live_loop, ctx);
            std::map<Memory, double> done;
            for (std::int64_t iter = 0; iter <= ctx.cfg->max_loop_iterations; ++iter) {
                std::vector<MemDist::Entry> cont;
                for (const auto& [m, w] : cur.entries()) {
                    if (eval_bool(*c.expr, m)) cont.emplace_back(m, w);
                    else done[m] += w;
                }
                if (cont.empty()) break;
                if (iter == ctx.cfg->max_loop_iterations) {
                    for (const auto& [m, w] : cont) ctx.dropped_loop_mass += w;
                    break;
                }
                MemDist body_out =
                    run(*c.c1, MemDist::from_weights(std::move(cont)), live_loop, ctx);
                cur = collapse(body_out, live_loop, ctx);
            }
            MemDist out;
            for (auto& [m, w] : done) out.mutable_entries().emplace_back(m, w);
            if (in.is_full() && std::abs(out.mass() - 1.0) <= kMassTolerance) out.set_full();
            return out;
        }
    }
    return in;
}

VarSet all_vars(const DeclTable& t) {
    VarSet s;
    for (const Decl& d : t.decls()) s.insert(d.name);
    return s;
}

} // namespace

MemDist interpret(const Program& p, const Memory& m0, const InterpConfig& cfg) {
    Ctx ctx{&p.decls, &cfg, 0.0, 0.0, Memory::canonical(p.decls), {}};
    return run(*p.body, MemDist::point(m0), all_vars(p.decls), ctx);
}

InterpResult interpret_project(const DeclTable& decls, const Command& body, const Memory& m0,
                               const InterpConfig& cfg, const VarSet& keep) {
    Ctx ctx{&decls, &cfg, 0.0, 0.0, Memory::canonical(decls), {}};
    MemDist d = run(body, MemDist::point(m0), keep, ctx);
    return InterpResult{collapse(d, keep, ctx), ctx.truncation_budget, ctx.dropped_loop_mass};
}

InterpResult interpret_project(const Program& p, const Memory& m0, const InterpConfig& cfg,
                               const VarSet& keep) {
    return interpret_project(p.decls, *p.body, m0, cfg, keep);
}

SubDistribution<Value> output_distribution(const Program& p, const Memory& m0,
                                           const InterpConfig& cfg) {
    InterpResult r = interpret_project(p, m0, cfg, {p.return_var});
    int idx = p.decls.index_of(p.return_var);
    if (idx < 0) throw EvalError("program has no declared return variable");
    return r.dist.map([idx](const Memory& m) { return m.slots[std::size_t(idx)]; });
}

} // namespace pwv
