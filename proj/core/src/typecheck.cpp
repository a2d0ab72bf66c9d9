// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/typecheck.hpp"

#include "pwv/printer.hpp"

namespace pwv {

namespace {

void err(std::vector<TypeError>* errors, const Expr& e, const std::string& msg) {
    if (errors) errors->push_back({print_expr(e), msg});
}

} // namespace

Ty type_of(const Expr& e, const DeclTable& decls, std::vector<TypeError>* errors) {
    auto want = [&](const Expr& sub, Ty expected) {
        Ty got = type_of(sub, decls, errors);
        if (got != expected)
            err(errors, sub, "expected " + ty_name(expected) + ", got " + ty_name(got));
    };
    switch (e.kind) {
        case ExprKind::IntLit: return Ty::Int;
        case ExprKind::BoolLit: return Ty::Bool;
        case ExprKind::Var: {
            const Decl* d = decls.find(e.var);
            if (!d) {
                err(errors, e, "undeclared variable");
                return Ty::Int;
            }
            return d->type;
        }
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
            want(*e.args[0], Ty::Int);
            want(*e.args[1], Ty::Int);
            return Ty::Int;
        case ExprKind::Abs: want(*e.args[0], Ty::Int); return Ty::Int;
        case ExprKind::Le:
        case ExprKind::Lt:
            want(*e.args[0], Ty::Int);
            want(*e.args[1], Ty::Int);
            return Ty::Bool;
        case ExprKind::Eq:
        case ExprKind::Ne: {
            Ty a = type_of(*e.args[0], decls, errors);
            Ty b = type_of(*e.args[1], decls, errors);
            if (a != b) err(errors, e, "comparison of " + ty_name(a) + " and " + ty_name(b));
            return Ty::Bool;
        }
        case ExprKind::And:
        case ExprKind::Or:
            want(*e.args[0], Ty::Bool);
            want(*e.args[1], Ty::Bool);
            return Ty::Bool;
        case ExprKind::Not: want(*e.args[0], Ty::Bool); return Ty::Bool;
        case ExprKind::Len: want(*e.args[0], Ty::QueryList); return Ty::Int;
        case ExprKind::Index: {
            Ty base = type_of(*e.args[0], decls, errors);
            want(*e.args[1], Ty::Int);
            if (base == Ty::Db) return Ty::Int;
            if (base == Ty::QueryList) return Ty::Query;
            err(errors, e, "indexing a " + ty_name(base));
            return Ty::Int;
        }
        case ExprKind::EvalQ:
            want(*e.args[0], Ty::Query);
            want(*e.args[1], Ty::Db);
            return Ty::Int;
    }
    return Ty::Int;
}

std::vector<TypeError> typecheck_command(const Command& c, const DeclTable& decls) {
    std::vector<TypeError> errors;
    auto want = [&](const Expr& e, Ty expected) {
        Ty got = type_of(e, decls, &errors);
        if (got != expected)
            errors.push_back({print_expr(e),
                              "expected " + ty_name(expected) + ", got " + ty_name(got)});
    };
    switch (c.kind) {
        case CmdKind::Skip: break;
        case CmdKind::Assign: {
            const Decl* d = decls.find(c.var);
            if (!d) {
                errors.push_back({c.var, "undeclared variable"});
                break;
            }
            Ty rhs = type_of(*c.expr, decls, &errors);
            if (rhs != d->type)
                errors.push_back({c.var + " := " + print_expr(*c.expr),
                                  "assigning " + ty_name(rhs) + " to " + ty_name(d->type) +
                                      " variable"});
            break;
        }
        case CmdKind::SampleLap:
        case CmdKind::SampleOsLap: {
            const Decl* d = decls.find(c.var);
            if (!d) {
                errors.push_back({c.var, "undeclared variable"});
            } else if (d->type != Ty::Int) {
                errors.push_back({c.var, "sampling target must be int"});
            }
            want(*c.expr, Ty::Int);
            break;
        }
        case CmdKind::Seq: {
            auto e1 = typecheck_command(*c.c1, decls);
            auto e2 = typecheck_command(*c.c2, decls);
            errors.insert(errors.end(), e1.begin(), e1.end());
            errors.insert(errors.end(), e2.begin(), e2.end());
            break;
        }
        case CmdKind::If: {
            want(*c.expr, Ty::Bool);
            auto e1 = typecheck_command(*c.c1, decls);
            auto e2 = typecheck_command(*c.c2, decls);
            errors.insert(errors.end(), e1.begin(), e1.end());
            errors.insert(errors.end(), e2.begin(), e2.end());
            break;
        }
        case CmdKind::While: {
            want(*c.expr, Ty::Bool);
            auto e1 = typecheck_command(*c.c1, decls);
            errors.insert(errors.end(), e1.begin(), e1.end());
            break;
        }
    }
    return errors;
}

std::vector<TypeError> typecheck(const Program& p) {
    std::vector<TypeError> errors = typecheck_command(*p.body, p.decls);
    if (!p.decls.find(p.return_var))
        errors.push_back({p.return_var, "return variable not declared"});
    return errors;
}

} // namespace pwv
