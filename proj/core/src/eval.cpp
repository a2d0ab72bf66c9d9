// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/eval.hpp"

#include "pwv/printer.hpp"

#include <cstdlib>

namespace pwv {

Value eval_expr(const Expr& e, const Memory& m) {
    auto as_int = [&](const Expr& sub) { return std::get<std::int64_t>(eval_expr(sub, m)); };
    auto as_bool = [&](const Expr& sub) { return std::get<bool>(eval_expr(sub, m)); };
    switch (e.kind) {
        case ExprKind::IntLit: return e.ival;
        case ExprKind::BoolLit: return e.ival != 0;
        case ExprKind::Var: {
            int idx = m.decls->index_of(e.var);
            if (idx < 0) throw EvalError("unbound variable " + e.var);
            return m.get(idx);
        }
        case ExprKind::Add: return as_int(*e.args[0]) + as_int(*e.args[1]);
        case ExprKind::Sub: return as_int(*e.args[0]) - as_int(*e.args[1]);
        case ExprKind::Mul: return as_int(*e.args[0]) * as_int(*e.args[1]);
        case ExprKind::Abs: return std::abs(as_int(*e.args[0]));
        case ExprKind::Eq: return eval_expr(*e.args[0], m) == eval_expr(*e.args[1], m);
        case ExprKind::Ne: return !(eval_expr(*e.args[0], m) == eval_expr(*e.args[1], m));
        case ExprKind::Le: return as_int(*e.args[0]) <= as_int(*e.args[1]);
        case ExprKind::Lt: return as_int(*e.args[0]) < as_int(*e.args[1]);
        case ExprKind::And: return as_bool(*e.args[0]) && as_bool(*e.args[1]);
        case ExprKind::Or: return as_bool(*e.args[0]) || as_bool(*e.args[1]);
        case ExprKind::Not: return !as_bool(*e.args[0]);
        case ExprKind::Len:
            return std::get<QueryListVal>(eval_expr(*e.args[0], m)).length;
        case ExprKind::Index: {
            Value base = eval_expr(*e.args[0], m);
            std::int64_t i = as_int(*e.args[1]);
            if (auto* db = std::get_if<DbVec>(&base)) {
                if (i < 1 || i > std::int64_t(db->entries.size()))
                    throw EvalError("db index out of bounds: " + print_expr(e) + " at i=" +
                                    std::to_string(i));
                return db->entries[std::size_t(i - 1)];
            }
            const auto& ql = std::get<QueryListVal>(base);
            if (i < 1 || i > ql.length)
                throw EvalError("query index out of bounds: " + print_expr(e) + " at i=" +
                                std::to_string(i));
            return QueryVal{i};
        }
        case ExprKind::EvalQ: {
            // Lookup-query model: query j reads database coordinate j.
            QueryVal q = std::get<QueryVal>(eval_expr(*e.args[0], m));
            DbVec d = std::get<DbVec>(eval_expr(*e.args[1], m));
            if (q.coord < 1 || q.coord > std::int64_t(d.entries.size()))
                throw EvalError("query reads outside database: coordinate " +
                                std::to_string(q.coord));
            return d.entries[std::size_t(q.coord - 1)];
        }
    }
    throw EvalError("unreachable expression kind");
}

std::int64_t eval_int(const Expr& e, const Memory& m) {
    return std::get<std::int64_t>(eval_expr(e, m));
}

bool eval_bool(const Expr& e, const Memory& m) {
    return std::get<bool>(eval_expr(e, m));
}

} // namespace pwv
