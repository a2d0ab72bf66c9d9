// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/assertion.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pwv {

AExprPtr a_int(std::int64_t v) {
    auto a = std::make_shared<AExpr>();
    a->kind = AKind::IntLit;
    a->ival = v;
    return a;
}

AExprPtr a_bool(bool b) {
    auto a = std::make_shared<AExpr>();
    a->kind = AKind::BoolLit;
    a->ival = b ? 1 : 0;
    return a;
}

AExprPtr a_tagged(int side, std::string name) {
    auto a = std::make_shared<AExpr>();
    a->kind = AKind::TaggedVar;
    a->side = side;
    a->name = std::move(name);
    return a;
}

AExprPtr a_logical(std::string name) {
    auto a = std::make_shared<AExpr>();
    a->kind = AKind::LogicalVar;
    a->name = std::move(name);
    return a;
}

AExprPtr a_node(AKind k, std::vector<AExprPtr> args) {
    auto a = std::make_shared<AExpr>();
    a->kind = k;
    a->args = std::move(args);
    return a;
}

AExprPtr a_and(AExprPtr a, AExprPtr b) { return a_node(AKind::And, {std::move(a), std::move(b)}); }
AExprPtr a_or(AExprPtr a, AExprPtr b) { return a_node(AKind::Or, {std::move(a), std::move(b)}); }
AExprPtr a_not(AExprPtr a) { return a_node(AKind::Not, {std::move(a)}); }
AExprPtr a_implies(AExprPtr a, AExprPtr b) {
    return a_node(AKind::Implies, {std::move(a), std::move(b)});
}
AExprPtr a_eq(AExprPtr a, AExprPtr b) { return a_node(AKind::Eq, {std::move(a), std::move(b)}); }
AExprPtr a_le(AExprPtr a, AExprPtr b) { return a_node(AKind::Le, {std::move(a), std::move(b)}); }
AExprPtr a_lt(AExprPtr a, AExprPtr b) { return a_node(AKind::Lt, {std::move(a), std::move(b)}); }
AExprPtr a_add(AExprPtr a, AExprPtr b) { return a_node(AKind::Add, {std::move(a), std::move(b)}); }
AExprPtr a_sub(AExprPtr a, AExprPtr b) { return a_node(AKind::Sub, {std::move(a), std::move(b)}); }
AExprPtr a_abs(AExprPtr a) { return a_node(AKind::Abs, {std::move(a)}); }

AExprPtr a_conj(std::vector<AExprPtr> parts) {
    if (parts.empty()) return a_bool(true);
    AExprPtr acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = a_and(acc, parts[i]);
    return acc;
}

bool a_equal(const AExpr& a, const AExpr& b) {
    if (a.kind != b.kind || a.ival != b.ival || a.side != b.side || a.name != b.name)
        return false;
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!a_equal(*a.args[i], *b.args[i])) return false;
    return true;
}

namespace {

int aprec(AKind k) {
    switch (k) {
        case AKind::Implies: return 0;
        case AKind::Or: return 1;
        case AKind::And: return 2;
        case AKind::Not: return 3;
        case AKind::Eq:
        case AKind::Ne:
        case AKind::Le:
        case AKind::Lt: return 4;
        case AKind::Add:
        case AKind::Sub: return 5;
        case AKind::Mul: return 6;
        default: return 7;
    }
}

void aemit(const AExpr& a, int ctx, std::ostringstream& os) {
    int p = aprec(a.kind);
    bool paren = p < ctx;
    bool is_cmp = a.kind == AKind::Eq || a.kind == AKind::Ne || a.kind == AKind::Le ||
                  a.kind == AKind::Lt;
    auto bin = [&](const char* op) {
        if (paren) os << "(";
        aemit(*a.args[0], is_cmp ? p + 1 : p, os);
        os << " " << op << " ";
        aemit(*a.args[1], p + 1, os);
        if (paren) os << ")";
    };
    switch (a.kind) {
        case AKind::IntLit: os << a.ival; break;
        case AKind::BoolLit: os << (a.ival ? "true" : "false"); break;
        case AKind::TaggedVar: os << a.name << "<" << a.side << ">"; break;
        case AKind::LogicalVar: os << a.name; break;
        case AKind::Add: bin("+"); break;
        case AKind::Sub: bin("-"); break;
        case AKind::Mul: bin("*"); break;
        case AKind::Eq: bin("=="); break;
        case AKind::Ne: bin("!="); break;
        case AKind::Le: bin("<="); break;
        case AKind::Lt: bin("<"); break;
        case AKind::And: bin("&&"); break;
        case AKind::Or: bin("||"); break;
        case AKind::Implies: {
            // Right associative.
            if (paren) os << "(";
            aemit(*a.args[0], p + 1, os);
            os << " => ";
            aemit(*a.args[1], p, os);
            if (paren) os << ")";
            break;
        }
        case AKind::Not:
            if (paren) os << "(";
            os << "!";
            aemit(*a.args[0], p, os);
            if (paren) os << ")";
            break;
        case AKind::Abs:
            os << "abs(";
            aemit(*a.args[0], 0, os);
            os << ")";
            break;
        case AKind::Len:
            os << "|";
            aemit(*a.args[0], 0, os);
            os << "|";
            break;
        case AKind::Index:
            aemit(*a.args[0], 7, os);
            os << "[";
            aemit(*a.args[1], 0, os);
            os << "]";
            break;
        case AKind::EvalQ:
            os << "evalQ(";
            aemit(*a.args[0], 0, os);
            os << ", ";
            aemit(*a.args[1], 0, os);
            os << ")";
            break;
        case AKind::Adj:
            os << "adj(";
            aemit(*a.args[0], 0, os);
            os << ", ";
            aemit(*a.args[1], 0, os);
            os << ")";
            break;
        case AKind::Sens1:
            os << "sens1(";
            aemit(*a.args[0], 0, os);
            os << ", ";
            aemit(*a.args[1], 0, os);
            os << ", ";
            aemit(*a.args[2], 0, os);
            os << ")";
            break;
    }
}

// --- assertion parser ------------------------------------------------------

struct ATok {
    enum Kind {
        Ident, Int, Tagged, LParen, RParen, LBracket, RBracket, Pipe, Comma,
        Plus, Minus, Star, EqEq, Ne, Le, Lt, Ge, Gt, AndAnd, OrOr, Bang, Implies,
        True, False, Abs, EvalQ, Adj, Sens1, End,
    } kind;
    std::string text;
    std::int64_t ival = 0;
    int side = 0;
};

class ALexer {
  public:
    explicit ALexer(const std::string& s) : s_(s) { next(); }
    const ATok& peek() const { return tok_; }
    ATok take() {
        ATok t = tok_;
        next();
        return t;
    }

  private:
    void next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {ATok::End, "", 0, 0};
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                id += s_[pos_++];
            // Tag lookahead: ident '<' 1|2 '>' is a tagged variable.
            if (pos_ + 2 < s_.size() && s_[pos_] == '<' &&
                (s_[pos_ + 1] == '1' || s_[pos_ + 1] == '2') && s_[pos_ + 2] == '>') {
                int side = s_[pos_ + 1] - '0';
                pos_ += 3;
                tok_ = {ATok::Tagged, id, 0, side};
                return;
            }
            if (id == "true") tok_ = {ATok::True, id, 0, 0};
            else if (id == "false") tok_ = {ATok::False, id, 0, 0};
            else if (id == "abs") tok_ = {ATok::Abs, id, 0, 0};
            else if (id == "evalQ") tok_ = {ATok::EvalQ, id, 0, 0};
            else if (id == "adj") tok_ = {ATok::Adj, id, 0, 0};
            else if (id == "sens1") tok_ = {ATok::Sens1, id, 0, 0};
            else tok_ = {ATok::Ident, id, 0, 0};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
            tok_ = {ATok::Int, "", v, 0};
            return;
        }
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < s_.size() && s_[pos_ + 1] == b;
        };
        if (two('=', '>')) { pos_ += 2; tok_ = {ATok::Implies, "", 0, 0}; return; }
        if (two('=', '=')) { pos_ += 2; tok_ = {ATok::EqEq, "", 0, 0}; return; }
        if (two('!', '=')) { pos_ += 2; tok_ = {ATok::Ne, "", 0, 0}; return; }
        if (two('<', '=')) { pos_ += 2; tok_ = {ATok::Le, "", 0, 0}; return; }
        if (two('>', '=')) { pos_ += 2; tok_ = {ATok::Ge, "", 0, 0}; return; }
        if (two('&', '&')) { pos_ += 2; tok_ = {ATok::AndAnd, "", 0, 0}; return; }
        if (two('|', '|')) { pos_ += 2; tok_ = {ATok::OrOr, "", 0, 0}; return; }
        ++pos_;
        switch (c) {
            case '(': tok_ = {ATok::LParen, "", 0, 0}; return;
            case ')': tok_ = {ATok::RParen, "", 0, 0}; return;
            case '[': tok_ = {ATok::LBracket, "", 0, 0}; return;
            case ']': tok_ = {ATok::RBracket, "", 0, 0}; return;
            case '|': tok_ = {ATok::Pipe, "", 0, 0}; return;
            case ',': tok_ = {ATok::Comma, "", 0, 0}; return;
            case '+': tok_ = {ATok::Plus, "", 0, 0}; return;
            case '-': tok_ = {ATok::Minus, "", 0, 0}; return;
            case '*': tok_ = {ATok::Star, "", 0, 0}; return;
            case '<': tok_ = {ATok::Lt, "", 0, 0}; return;
            case '>': tok_ = {ATok::Gt, "", 0, 0}; return;
            case '=': tok_ = {ATok::EqEq, "", 0, 0}; return;
            case '!': tok_ = {ATok::Bang, "", 0, 0}; return;
        }
        throw std::invalid_argument(std::string("assertion: unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    ATok tok_;
};

class AParser {
  public:
    explicit AParser(const std::string& s) : lex_(s) {}

    AExprPtr parse() {
        AExprPtr a = implies();
        if (lex_.peek().kind != ATok::End)
            throw std::invalid_argument("assertion: trailing input");
        return a;
    }

  private:
    AExprPtr implies() {
        AExprPtr a = or_();
        if (lex_.peek().kind == ATok::Implies) {
            lex_.take();
            return a_implies(a, implies());
        }
        return a;
    }
    AExprPtr or_() {
        AExprPtr a = and_();
        while (lex_.peek().kind == ATok::OrOr) {
            lex_.take();
            a = a_or(a, and_());
        }
        return a;
    }
    AExprPtr and_() {
        AExprPtr a = not_();
        while (lex_.peek().kind == ATok::AndAnd) {
            lex_.take();
            a = a_and(a, not_());
        }
        return a;
    }
    AExprPtr not_() {
        if (lex_.peek().kind == ATok::Bang) {
            lex_.take();
            return a_not(not_());
        }
        return cmp();
    }
    AExprPtr cmp() {
        AExprPtr a = add();
        switch (lex_.peek().kind) {
            case ATok::EqEq: lex_.take(); return a_eq(a, add());
            case ATok::Ne: lex_.take(); return a_node(AKind::Ne, {a, add()});
            case ATok::Le: lex_.take(); return a_le(a, add());
            case ATok::Lt: lex_.take(); return a_lt(a, add());
            case ATok::Ge: lex_.take(); return a_le(add(), a);
            case ATok::Gt: lex_.take(); return a_lt(add(), a);
            default: return a;
        }
    }
    AExprPtr add() {
        AExprPtr a = mul();
        while (true) {
            if (lex_.peek().kind == ATok::Plus) {
                lex_.take();
                a = a_add(a, mul());
            } else if (lex_.peek().kind == ATok::Minus) {
                lex_.take();
                a = a_sub(a, mul());
            } else {
                return a;
            }
        }
    }
    AExprPtr mul() {
        AExprPtr a = unary();
        while (lex_.peek().kind == ATok::Star) {
            lex_.take();
            a = a_node(AKind::Mul, {a, unary()});
        }
        return a;
    }
    AExprPtr unary() {
        if (lex_.peek().kind == ATok::Minus) {
            lex_.take();
            if (lex_.peek().kind == ATok::Int) return a_int(-lex_.take().ival);
            return a_sub(a_int(0), unary());
        }
        return postfix();
    }
    AExprPtr postfix() {
        AExprPtr a = atom();
        while (lex_.peek().kind == ATok::LBracket) {
            lex_.take();
            AExprPtr idx = implies();
            expect(ATok::RBracket, "']'");
            a = a_node(AKind::Index, {a, idx});
        }
        return a;
    }
    AExprPtr atom() {
        ATok t = lex_.take();
        switch (t.kind) {
            case ATok::Int: return a_int(t.ival);
            case ATok::True: return a_bool(true);
            case ATok::False: return a_bool(false);
            case ATok::Tagged: return a_tagged(t.side, t.text);
            case ATok::Ident: return a_logical(t.text);
            case ATok::LParen: {
                AExprPtr a = implies();
                expect(ATok::RParen, "')'");
                return a;
            }
            case ATok::Pipe: {
                AExprPtr a = implies();
                expect(ATok::Pipe, "'|'");
                return a_node(AKind::Len, {a});
            }
            case ATok::Abs: {
                expect(ATok::LParen, "'('");
                AExprPtr a = implies();
                expect(ATok::RParen, "')'");
                return a_abs(a);
            }
            case ATok::EvalQ: return call(AKind::EvalQ, 2);
            case ATok::Adj: return call(AKind::Adj, 2);
            case ATok::Sens1: return call(AKind::Sens1, 3);
            default: throw std::invalid_argument("assertion: expected an atom");
        }
    }
    AExprPtr call(AKind k, int arity) {
        expect(ATok::LParen, "'('");
        std::vector<AExprPtr> args;
        for (int i = 0; i < arity; ++i) {
            if (i) expect(ATok::Comma, "','");
            args.push_back(implies());
        }
        expect(ATok::RParen, "')'");
        return a_node(k, std::move(args));
    }
    void expect(ATok::Kind k, const char* what) {
        if (lex_.take().kind != k)
            throw std::invalid_argument(std::string("assertion: expected ") + what);
    }

    ALexer lex_;
};

} // namespace

std::string print_assertion(const AExpr& a) {
    std::ostringstream os;
    aemit(a, 0, os);
    return os.str();
}

RelAssertion parse_assertion(const std::string& text) { return AParser(text).parse(); }

AExprPtr tag_expr(const Expr& e, int side) {
    switch (e.kind) {
        case ExprKind::IntLit: return a_int(e.ival);
        case ExprKind::BoolLit: return a_bool(e.ival != 0);
        case ExprKind::Var: return a_tagged(side, e.var);
        default: break;
    }
    static const std::map<ExprKind, AKind> kind_map = {
        {ExprKind::Add, AKind::Add},     {ExprKind::Sub, AKind::Sub},
        {ExprKind::Mul, AKind::Mul},     {ExprKind::Abs, AKind::Abs},
        {ExprKind::Eq, AKind::Eq},       {ExprKind::Ne, AKind::Ne},
        {ExprKind::Le, AKind::Le},       {ExprKind::Lt, AKind::Lt},
        {ExprKind::And, AKind::And},     {ExprKind::Or, AKind::Or},
        {ExprKind::Not, AKind::Not},     {ExprKind::Len, AKind::Len},
        {ExprKind::Index, AKind::Index}, {ExprKind::EvalQ, AKind::EvalQ},
    };
    std::vector<AExprPtr> args;
    for (const auto& sub : e.args) args.push_back(tag_expr(*sub, side));
    return a_node(kind_map.at(e.kind), std::move(args));
}

Value eval_aexpr(const AExpr& a, const Memory& m1, const Memory& m2, const LogEnv& env) {
    auto as_int = [&](const AExpr& s) {
        return std::get<std::int64_t>(eval_aexpr(s, m1, m2, env));
    };
    auto as_bool = [&](const AExpr& s) { return std::get<bool>(eval_aexpr(s, m1, m2, env)); };
    switch (a.kind) {
        case AKind::IntLit: return a.ival;
        case AKind::BoolLit: return a.ival != 0;
        case AKind::TaggedVar: {
            const Memory& m = a.side == 1 ? m1 : m2;
            int idx = m.decls->index_of(a.name);
            if (idx < 0) throw EvalError("assertion references undeclared " + a.name);
            return m.get(idx);
        }
        case AKind::LogicalVar: {
            auto it = env.find(a.name);
            if (it == env.end()) throw EvalError("unbound logical variable " + a.name);
            return it->second;
        }
        case AKind::Add: return as_int(*a.args[0]) + as_int(*a.args[1]);
        case AKind::Sub: return as_int(*a.args[0]) - as_int(*a.args[1]);
        case AKind::Mul: return as_int(*a.args[0]) * as_int(*a.args[1]);
        case AKind::Abs: return std::abs(as_int(*a.args[0]));
        case AKind::Eq:
            return eval_aexpr(*a.args[0], m1, m2, env) == eval_aexpr(*a.args[1], m1, m2, env);
        case AKind::Ne:
            return !(eval_aexpr(*a.args[0], m1, m2, env) ==
                     eval_aexpr(*a.args[1], m1, m2, env));
        case AKind::Le: return as_int(*a.args[0]) <= as_int(*a.args[1]);
        case AKind::Lt: return as_int(*a.args[0]) < as_int(*a.args[1]);
        case AKind::And: return as_bool(*a.args[0]) && as_bool(*a.args[1]);
        case AKind::Or: return as_bool(*a.args[0]) || as_bool(*a.args[1]);
        case AKind::Not: return !as_bool(*a.args[0]);
        case AKind::Implies: return !as_bool(*a.args[0]) || as_bool(*a.args[1]);
        case AKind::Len:
            return std::get<QueryListVal>(eval_aexpr(*a.args[0], m1, m2, env)).length;
        case AKind::Index: {
            Value base = eval_aexpr(*a.args[0], m1, m2, env);
            std::int64_t i = as_int(*a.args[1]);
            if (auto* db = std::get_if<DbVec>(&base)) {
                if (i < 1 || i > std::int64_t(db->entries.size()))
                    throw EvalError("assertion db index out of bounds");
                return db->entries[std::size_t(i - 1)];
            }
            const auto& ql = std::get<QueryListVal>(base);
            if (i < 1 || i > ql.length)
                throw EvalError("assertion query index out of bounds");
            return QueryVal{i};
        }
        case AKind::EvalQ: {
            QueryVal q = std::get<QueryVal>(eval_aexpr(*a.args[0], m1, m2, env));
            DbVec d = std::get<DbVec>(eval_aexpr(*a.args[1], m1, m2, env));
            if (q.coord < 1 || q.coord > std::int64_t(d.entries.size()))
                throw EvalError("assertion query reads outside database");
            return d.entries[std::size_t(q.coord - 1)];
        }
        case AKind::Adj: {
            DbVec d1 = std::get<DbVec>(eval_aexpr(*a.args[0], m1, m2, env));
            DbVec d2 = std::get<DbVec>(eval_aexpr(*a.args[1], m1, m2, env));
            if (d1.entries.size() != d2.entries.size()) return false;
            for (std::size_t i = 0; i < d1.entries.size(); ++i) {
                std::int64_t diff = d1.entries[i] - d2.entries[i];
                if (diff < -1 || diff > 1) return false;
            }
            return true;
        }
        case AKind::Sens1: {
            QueryListVal q = std::get<QueryListVal>(eval_aexpr(*a.args[0], m1, m2, env));
            DbVec d1 = std::get<DbVec>(eval_aexpr(*a.args[1], m1, m2, env));
            DbVec d2 = std::get<DbVec>(eval_aexpr(*a.args[2], m1, m2, env));
            for (std::int64_t j = 1; j <= q.length; ++j) {
                if (j > std::int64_t(d1.entries.size()) ||
                    j > std::int64_t(d2.entries.size()))
                    throw EvalError("sens1: query reads outside database");
                std::int64_t diff =
                    d1.entries[std::size_t(j - 1)] - d2.entries[std::size_t(j - 1)];
                if (diff < -1 || diff > 1) return false;
            }
            return true;
        }
    }
    throw EvalError("unreachable assertion kind");
}

bool assertion_eval(const AExpr& a, const Memory& m1, const Memory& m2, const LogEnv& env) {
    return std::get<bool>(eval_aexpr(a, m1, m2, env));
}

RelAssertion substitute(const RelAssertion& a, int side, const std::string& x, const Expr& e) {
    if (a->kind == AKind::TaggedVar) {
        if (a->side == side && a->name == x) return tag_expr(e, side);
        return a;
    }
    if (a->args.empty()) return a;
    std::vector<AExprPtr> args;
    bool changed = false;
    for (const auto& sub : a->args) {
        AExprPtr s = substitute(sub, side, x, e);
        changed = changed || s != sub;
        args.push_back(std::move(s));
    }
    if (!changed) return a;
    auto out = std::make_shared<AExpr>(*a);
    out->args = std::move(args);
    return out;
}

namespace {

AExprPtr fold(const AExprPtr& a) {
    if (a->args.empty()) return a;
    auto all_int = [&] {
        for (const auto& s : a->args)
            if (s->kind != AKind::IntLit) return false;
        return true;
    };
    if (all_int()) {
        switch (a->kind) {
            case AKind::Add: return a_int(a->args[0]->ival + a->args[1]->ival);
            case AKind::Sub: return a_int(a->args[0]->ival - a->args[1]->ival);
            case AKind::Mul: return a_int(a->args[0]->ival * a->args[1]->ival);
            case AKind::Abs: return a_int(std::abs(a->args[0]->ival));
            default: break;
        }
    }
    return a;
}

} // namespace

AExprPtr subst_logical(const AExprPtr& a, const std::string& name, std::int64_t v) {
    if (a->kind == AKind::LogicalVar && a->name == name) return a_int(v);
    if (a->args.empty()) return a;
    std::vector<AExprPtr> args;
    bool changed = false;
    for (const auto& sub : a->args) {
        AExprPtr s = subst_logical(sub, name, v);
        changed = changed || s != sub;
        args.push_back(std::move(s));
    }
    if (!changed) return a;
    auto out = std::make_shared<AExpr>(*a);
    out->args = std::move(args);
    return fold(out);
}

void tagged_vars_into(const AExpr& a, int side, std::set<std::string>& out) {
    if (a.kind == AKind::TaggedVar && a.side == side) out.insert(a.name);
    for (const auto& sub : a.args) tagged_vars_into(*sub, side, out);
}

std::set<std::string> tagged_vars(const AExpr& a, int side) {
    std::set<std::string> out;
    tagged_vars_into(a, side, out);
    return out;
}

std::set<std::string> logical_vars(const AExpr& a) {
    std::set<std::string> out;
    if (a.kind == AKind::LogicalVar) out.insert(a.name);
    for (const auto& sub : a.args) {
        auto s = logical_vars(*sub);
        out.insert(s.begin(), s.end());
    }
    return out;
}

void conjuncts_into(const AExprPtr& a, std::vector<AExprPtr>& out) {
    if (a->kind == AKind::And) {
        conjuncts_into(a->args[0], out);
        conjuncts_into(a->args[1], out);
        return;
    }
    out.push_back(a);
}

Ty atype_of(const AExpr& a, const DeclTable& decls, std::vector<std::string>* errors) {
    auto err = [&](const std::string& msg) {
        if (errors) errors->push_back(msg + " in: " + print_assertion(a));
    };
    auto want = [&](const AExpr& s, Ty expected) {
        Ty got = atype_of(s, decls, errors);
        if (got != expected) err("expected " + ty_name(expected) + ", got " + ty_name(got));
    };
    switch (a.kind) {
        case AKind::IntLit: return Ty::Int;
        case AKind::BoolLit: return Ty::Bool;
        case AKind::TaggedVar: {
            const Decl* d = decls.find(a.name);
            if (!d) {
                err("undeclared variable " + a.name);
                return Ty::Int;
            }
            return d->type;
        }
        case AKind::LogicalVar: return Ty::Int;
        case AKind::Add:
        case AKind::Sub:
        case AKind::Mul:
            want(*a.args[0], Ty::Int);
            want(*a.args[1], Ty::Int);
            return Ty::Int;
        case AKind::Abs: want(*a.args[0], Ty::Int); return Ty::Int;
        case AKind::Eq:
        case AKind::Ne: {
            Ty t1 = atype_of(*a.args[0], decls, errors);
            Ty t2 = atype_of(*a.args[1], decls, errors);
            if (t1 != t2) err("comparison of " + ty_name(t1) + " and " + ty_name(t2));
            return Ty::Bool;
        }
        case AKind::Le:
        case AKind::Lt:
            want(*a.args[0], Ty::Int);
            want(*a.args[1], Ty::Int);
            return Ty::Bool;
        case AKind::And:
        case AKind::Or:
        case AKind::Implies:
            want(*a.args[0], Ty::Bool);
            want(*a.args[1], Ty::Bool);
            return Ty::Bool;
        case AKind::Not: want(*a.args[0], Ty::Bool); return Ty::Bool;
        case AKind::Len: want(*a.args[0], Ty::QueryList); return Ty::Int;
        case AKind::Index: {
            Ty base = atype_of(*a.args[0], decls, errors);
            want(*a.args[1], Ty::Int);
            if (base == Ty::Db) return Ty::Int;
            if (base == Ty::QueryList) return Ty::Query;
            err("indexing a " + ty_name(base));
            return Ty::Int;
        }
        case AKind::EvalQ:
            want(*a.args[0], Ty::Query);
            want(*a.args[1], Ty::Db);
            return Ty::Int;
        case AKind::Adj:
            want(*a.args[0], Ty::Db);
            want(*a.args[1], Ty::Db);
            return Ty::Bool;
        case AKind::Sens1:
            want(*a.args[0], Ty::QueryList);
            want(*a.args[1], Ty::Db);
            want(*a.args[2], Ty::Db);
            return Ty::Bool;
    }
    return Ty::Bool;
}

} // namespace pwv
