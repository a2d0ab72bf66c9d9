// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/lang.hpp"

#include <sstream>
#include <stdexcept>

namespace pwv {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::string ty_name(Ty t) {
    switch (t) {
        case Ty::Int: return "int";
        case Ty::Bool: return "bool";
        case Ty::Db: return "db";
        case Ty::QueryList: return "querylist";
        case Ty::Query: return "query";
    }
    return "?";
}

Ty value_type(const Value& v) {
    switch (v.index()) {
        case 0: return Ty::Int;
        case 1: return Ty::Bool;
        case 2: return Ty::Db;
        case 3: return Ty::QueryList;
        default: return Ty::Query;
    }
}

std::string value_str(const Value& v) {
    switch (v.index()) {
        case 0: return std::to_string(std::get<std::int64_t>(v));
        case 1: return std::get<bool>(v) ? "true" : "false";
        case 2: {
            std::ostringstream os;
            os << "(";
            const auto& db = std::get<DbVec>(v).entries;
            for (std::size_t i = 0; i < db.size(); ++i) os << (i ? "," : "") << db[i];
            os << ")";
            return os.str();
        }
        case 3: return "queries[" + std::to_string(std::get<QueryListVal>(v).length) + "]";
        default: return "q" + std::to_string(std::get<QueryVal>(v).coord);
    }
}

int DeclTable::add(Decl d) {
    if (index_.count(d.name)) throw std::invalid_argument("duplicate declaration: " + d.name);
    int idx = int(decls_.size());
    index_[d.name] = idx;
    decls_.push_back(std::move(d));
    return idx;
}

const Decl* DeclTable::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &decls_[it->second];
}

int DeclTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool operator==(const DeclTable& a, const DeclTable& b) {
    if (a.decls_.size() != b.decls_.size()) return false;
    for (std::size_t i = 0; i < a.decls_.size(); ++i) {
        const Decl &x = a.decls_[i], &y = b.decls_[i];
        if (x.name != y.name || x.type != y.type || x.lo != y.lo || x.hi != y.hi ||
            x.dim != y.dim)
            return false;
    }
    return true;
}

Memory Memory::canonical(const DeclTable& t) {
    Memory m;
    m.decls = &t;
    m.slots.reserve(t.size());
    for (const Decl& d : t.decls()) {
        switch (d.type) {
            case Ty::Int: m.slots.push_back(d.lo); break;
            case Ty::Bool: m.slots.push_back(false); break;
            case Ty::Db: {
                DbVec db;
                db.entries.assign(std::size_t(d.dim), d.lo);
                m.slots.push_back(std::move(db));
                break;
            }
            case Ty::QueryList: m.slots.push_back(QueryListVal{d.dim}); break;
            case Ty::Query: m.slots.push_back(QueryVal{1}); break;
        }
    }
    return m;
}

std::vector<Value> decl_domain(const Decl& d) {
    std::vector<Value> out;
    switch (d.type) {
        case Ty::Int:
            for (std::int64_t v = d.lo; v <= d.hi; ++v) out.push_back(v);
            break;
        case Ty::Bool:
            out.push_back(false);
            out.push_back(true);
            break;
        case Ty::Db: {
            // All vectors over [lo, hi]^dim, ascending lexicographically.
            std::vector<std::int64_t> cur(std::size_t(d.dim), d.lo);
            while (true) {
                out.push_back(DbVec{cur});
                int i = int(d.dim) - 1;
                while (i >= 0 && cur[std::size_t(i)] == d.hi) { cur[std::size_t(i)] = d.lo; --i; }
                if (i < 0) break;
                ++cur[std::size_t(i)];
            }
            break;
        }
        case Ty::QueryList: out.push_back(QueryListVal{d.dim}); break;
        case Ty::Query:
            for (std::int64_t q = 1; q <= d.dim; ++q) out.push_back(QueryVal{q});
            break;
    }
    return out;
}

ExprPtr int_lit(std::int64_t v) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::IntLit;
    e->ival = v;
    return e;
}

ExprPtr bool_lit(bool b) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::BoolLit;
    e->ival = b ? 1 : 0;
    return e;
}

ExprPtr var_ref(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Var;
    e->var = std::move(name);
    return e;
}

ExprPtr mk_expr(ExprKind k, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = std::move(args);
    return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.ival != b.ival || a.var != b.var) return false;
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!expr_equal(*a.args[i], *b.args[i])) return false;
    return true;
}

CmdPtr mk_skip() {
    auto c = std::make_shared<Command>();
    c->kind = CmdKind::Skip;
    return c;
}

CmdPtr mk_assign(std::string x, ExprPtr e) {
    auto c = std::make_shared<Command>();
    c->kind = CmdKind::Assign;
    c->var = std::move(x);
    c->expr = std::move(e);
    return c;
}

CmdPtr mk_sample(CmdKind kind, std::string x, Rat scale, ExprPtr center) {
    auto c = std::make_shared<Command>();
    c->kind = kind;
    c->var = std::move(x);
    c->scale = scale;
    c->expr = std::move(center);
    return c;
}

CmdPtr mk_seq(CmdPtr a, CmdPtr b) {
    auto c = std::make_shared<Command>();
    c->kind = CmdKind::Seq;
    c->c1 = std::move(a);
    c->c2 = std::move(b);
    return c;
}

CmdPtr mk_seq(std::vector<CmdPtr> cs) {
    if (cs.empty()) return mk_skip();
    CmdPtr acc = cs.front();
    for (std::size_t i = 1; i < cs.size(); ++i) acc = mk_seq(acc, cs[i]);
    return acc;
}

CmdPtr mk_if(ExprPtr guard, CmdPtr then_c, CmdPtr else_c) {
    auto c = std::make_shared<Command>();
    c->kind = CmdKind::If;
    c->expr = std::move(guard);
    c->c1 = std::move(then_c);
    c->c2 = std::move(else_c);
    return c;
}

CmdPtr mk_while(ExprPtr guard, CmdPtr body) {
    auto c = std::make_shared<Command>();
    c->kind = CmdKind::While;
    c->expr = std::move(guard);
    c->c1 = std::move(body);
    return c;
}

bool command_equal(const Command& a, const Command& b) {
    if (a.kind != b.kind) {
        // Fall back to flattened comparison so skip;c == c etc.
        return flat_equal(flatten(a), flatten(b));
    }
    switch (a.kind) {
        case CmdKind::Skip: return true;
        case CmdKind::Assign: return a.var == b.var && expr_equal(*a.expr, *b.expr);
        case CmdKind::SampleLap:
        case CmdKind::SampleOsLap:
            return a.var == b.var && a.scale == b.scale && expr_equal(*a.expr, *b.expr);
        case CmdKind::Seq: return flat_equal(flatten(a), flatten(b));
        case CmdKind::If:
            return expr_equal(*a.expr, *b.expr) && command_equal(*a.c1, *b.c1) &&
                   command_equal(*a.c2, *b.c2);
        case CmdKind::While:
            return expr_equal(*a.expr, *b.expr) && command_equal(*a.c1, *b.c1);
    }
    return false;
}

static void flatten_into(const Command& c, std::vector<const Command*>& out) {
    switch (c.kind) {
        case CmdKind::Skip: return;
        case CmdKind::Seq:
            flatten_into(*c.c1, out);
            flatten_into(*c.c2, out);
            return;
        default: out.push_back(&c); return;
    }
}

std::vector<const Command*> flatten(const Command& c) {
    std::vector<const Command*> out;
    flatten_into(c, out);
    return out;
}

bool flat_equal(const std::vector<const Command*>& a, const std::vector<const Command*>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!command_equal(*a[i], *b[i])) return false;
    return true;
}

} // namespace pwv
