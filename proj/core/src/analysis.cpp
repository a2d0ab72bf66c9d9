// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/analysis.hpp"

namespace pwv {

void free_vars_into(const Expr& e, VarSet& out) {
    if (e.kind == ExprKind::Var) {
        out.insert(e.var);
        return;
    }
    for (const auto& a : e.args) free_vars_into(*a, out);
}

VarSet free_vars(const Expr& e) {
    VarSet out;
    free_vars_into(e, out);
    return out;
}

VarSet modified_vars(const Command& c) {
    VarSet out;
    switch (c.kind) {
        case CmdKind::Skip: break;
        case CmdKind::Assign:
        case CmdKind::SampleLap:
        case CmdKind::SampleOsLap: out.insert(c.var); break;
        case CmdKind::Seq:
        case CmdKind::If: {
            VarSet a = modified_vars(*c.c1);
            VarSet b = modified_vars(*c.c2);
            out.insert(a.begin(), a.end());
            out.insert(b.begin(), b.end());
            break;
        }
        case CmdKind::While: out = modified_vars(*c.c1); break;
    }
    return out;
}

namespace {

// inputs(c, written): variables read before being written, scanning forward.
void inputs_rec(const Command& c, VarSet& written, VarSet& out) {
    auto read = [&](const Expr& e) {
        for (const std::string& v : free_vars(e))
            if (!written.count(v)) out.insert(v);
    };
    switch (c.kind) {
        case CmdKind::Skip: break;
        case CmdKind::Assign:
        case CmdKind::SampleLap:
        case CmdKind::SampleOsLap:
            read(*c.expr);
            written.insert(c.var);
            break;
        case CmdKind::Seq:
            inputs_rec(*c.c1, written, out);
            inputs_rec(*c.c2, written, out);
            break;
        case CmdKind::If: {
            read(*c.expr);
            VarSet w1 = written, w2 = written;
            inputs_rec(*c.c1, w1, out);
            inputs_rec(*c.c2, w2, out);
            // Only joins that both branches write count as written afterwards.
            VarSet joined;
            for (const std::string& v : w1)
                if (w2.count(v)) joined.insert(v);
            written = std::move(joined);
            break;
        }
        case CmdKind::While: {
            read(*c.expr);
            // The body may run zero times, so nothing it writes is definitely
            // written; reads inside see the pre-loop written set.
            VarSet w = written;
            inputs_rec(*c.c1, w, out);
            break;
        }
    }
}

} // namespace

VarSet input_vars(const Command& c) {
    VarSet written, out;
    inputs_rec(c, written, out);
    return out;
}

VarSet live_before(const Command& c, const VarSet& live_after) {
    switch (c.kind) {
        case CmdKind::Skip: return live_after;
        case CmdKind::Assign:
        case CmdKind::SampleLap:
        case CmdKind::SampleOsLap: {
            VarSet live = live_after;
            live.erase(c.var);
            free_vars_into(*c.expr, live); // rhs / center is always read
            return live;
        }
        case CmdKind::Seq: return live_before(*c.c1, live_before(*c.c2, live_after));
        case CmdKind::If: {
            VarSet a = live_before(*c.c1, live_after);
            VarSet b = live_before(*c.c2, live_after);
            a.insert(b.begin(), b.end());
            free_vars_into(*c.expr, a);
            return a;
        }
        case CmdKind::While: {
            // Least fixpoint of live = live_after ∪ FV(guard) ∪ live_before(body, live).
            VarSet live = live_after;
            free_vars_into(*c.expr, live);
            while (true) {
                VarSet next = live_before(*c.c1, live);
                next.insert(live.begin(), live.end());
                if (next == live) return live;
                live = std::move(next);
            }
        }
    }
    return live_after;
}

} // namespace pwv
