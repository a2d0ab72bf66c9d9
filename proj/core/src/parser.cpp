// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/parser.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace pwv {

namespace {

enum class Tok {
    Ident, Int, KwVar, KwInt, KwBool, KwDb, KwQuerylist, KwIn, KwSkip, KwIf,
    KwThen, KwElse, KwEnd, KwWhile, KwDo, KwReturn, KwTrue, KwFalse, KwLap,
    KwOslap, KwEps, KwAbs, KwEvalQ,
    Assign, SampleArrow, Semi, Colon, Comma, LParen, RParen, LBracket, RBracket,
    Pipe, Plus, Minus, Star, Slash, EqEq, Ne, Le, Lt, Ge, Gt, AndAnd, OrOr, Bang,
    Eof,
};

struct Token {
    Tok kind;
    std::string text;
    std::int64_t ival = 0;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(line_, col_, msg); }

    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Tok::Eof;
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                id += get();
            tok_.text = id;
            tok_.kind = keyword(id);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                v = v * 10 + (get() - '0');
            tok_.kind = Tok::Int;
            tok_.ival = v;
            return;
        }
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < src_.size() && src_[pos_ + 1] == b;
        };
        if (two(':', '=')) { get(); get(); tok_.kind = Tok::Assign; return; }
        if (two('<', '-') && pos_ + 2 < src_.size() && src_[pos_ + 2] == '$') {
            get(); get(); get();
            tok_.kind = Tok::SampleArrow;
            return;
        }
        if (two('=', '=')) { get(); get(); tok_.kind = Tok::EqEq; return; }
        if (two('!', '=')) { get(); get(); tok_.kind = Tok::Ne; return; }
        if (two('<', '=')) { get(); get(); tok_.kind = Tok::Le; return; }
        if (two('>', '=')) { get(); get(); tok_.kind = Tok::Ge; return; }
        if (two('&', '&')) { get(); get(); tok_.kind = Tok::AndAnd; return; }
        if (two('|', '|')) { get(); get(); tok_.kind = Tok::OrOr; return; }
        switch (c) {
            case ';': get(); tok_.kind = Tok::Semi; return;
            case ':': get(); tok_.kind = Tok::Colon; return;
            case ',': get(); tok_.kind = Tok::Comma; return;
            case '(': get(); tok_.kind = Tok::LParen; return;
            case ')': get(); tok_.kind = Tok::RParen; return;
            case '[': get(); tok_.kind = Tok::LBracket; return;
            case ']': get(); tok_.kind = Tok::RBracket; return;
            case '|': get(); tok_.kind = Tok::Pipe; return;
            case '+': get(); tok_.kind = Tok::Plus; return;
            case '-': get(); tok_.kind = Tok::Minus; return;
            case '*': get(); tok_.kind = Tok::Star; return;
            case '/': get(); tok_.kind = Tok::Slash; return;
            case '<': get(); tok_.kind = Tok::Lt; return;
            case '>': get(); tok_.kind = Tok::Gt; return;
            case '=': get(); tok_.kind = Tok::EqEq; return; // '=' accepted for '=='
            case '!': get(); tok_.kind = Tok::Bang; return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    static Tok keyword(const std::string& id) {
        if (id == "var") return Tok::KwVar;
        if (id == "int") return Tok::KwInt;
        if (id == "bool") return Tok::KwBool;
        if (id == "db") return Tok::KwDb;
        if (id == "querylist") return Tok::KwQuerylist;
        if (id == "in") return Tok::KwIn;
        if (id == "skip") return Tok::KwSkip;
        if (id == "if") return Tok::KwIf;
        if (id == "then") return Tok::KwThen;
        if (id == "else") return Tok::KwElse;
        if (id == "end") return Tok::KwEnd;
        if (id == "while") return Tok::KwWhile;
        if (id == "do") return Tok::KwDo;
        if (id == "return") return Tok::KwReturn;
        if (id == "true") return Tok::KwTrue;
        if (id == "false") return Tok::KwFalse;
        if (id == "lap") return Tok::KwLap;
        if (id == "oslap") return Tok::KwOslap;
        if (id == "eps") return Tok::KwEps;
        if (id == "abs") return Tok::KwAbs;
        if (id == "evalQ") return Tok::KwEvalQ;
        return Tok::Ident;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    char get() {
        char c = src_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
        return c;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
  public:
    Parser(const std::string& src, bool check_decls)
        : lex_(src), check_decls_(check_decls) {}

    Program program() {
        Program p;
        while (lex_.peek().kind == Tok::KwVar) p.decls.add(decl());
        for (const Decl& d : p.decls.decls()) declared_.insert(d.name);
        std::vector<CmdPtr> body = stmts_until({Tok::KwReturn});
        expect(Tok::KwReturn, "'return'");
        Token rv = expect(Tok::Ident, "return variable");
        require_declared(rv);
        p.return_var = rv.text;
        expect(Tok::Eof, "end of input");
        p.body = mk_seq(std::move(body));
        return p;
    }

    ExprPtr expr_only() {
        ExprPtr e = expr();
        expect(Tok::Eof, "end of input");
        return e;
    }

  private:
    Decl decl() {
        expect(Tok::KwVar, "'var'");
        Decl d;
        d.name = expect(Tok::Ident, "variable name").text;
        expect(Tok::Colon, "':'");
        Token ty = lex_.take();
        switch (ty.kind) {
            case Tok::KwInt:
                d.type = Ty::Int;
                range(d);
                break;
            case Tok::KwBool: d.type = Ty::Bool; break;
            case Tok::KwDb:
                d.type = Ty::Db;
                expect(Tok::LParen, "'('");
                d.dim = expect(Tok::Int, "dimension").ival;
                expect(Tok::RParen, "')'");
                range(d);
                break;
            case Tok::KwQuerylist:
                d.type = Ty::QueryList;
                expect(Tok::LParen, "'('");
                d.dim = expect(Tok::Int, "length").ival;
                expect(Tok::RParen, "')'");
                break;
            default: fail(ty, "type (int, bool, db(n), querylist(n))");
        }
        expect(Tok::Semi, "';'");
        return d;
    }

    void range(Decl& d) {
        expect(Tok::KwIn, "'in'");
        expect(Tok::LBracket, "'['");
        d.lo = signed_int();
        expect(Tok::Comma, "','");
        d.hi = signed_int();
        expect(Tok::RBracket, "']'");
        if (d.hi < d.lo) fail(lex_.peek(), "nonempty range");
    }

    std::int64_t signed_int() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) { lex_.take(); neg = true; }
        Token t = expect(Tok::Int, "integer");
        return neg ? -t.ival : t.ival;
    }

    std::vector<CmdPtr> stmts_until(std::set<Tok> stops) {
        std::vector<CmdPtr> out;
        while (!stops.count(lex_.peek().kind) && lex_.peek().kind != Tok::Eof)
            out.push_back(stmt());
        return out;
    }

    CmdPtr stmt() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::KwSkip: {
                lex_.take();
                expect(Tok::Semi, "';'");
                return mk_skip();
            }
            case Tok::KwIf: {
                lex_.take();
                ExprPtr g = expr();
                expect(Tok::KwThen, "'then'");
                std::vector<CmdPtr> then_c = stmts_until({Tok::KwElse, Tok::KwEnd});
                CmdPtr else_c = mk_skip();
                if (lex_.peek().kind == Tok::KwElse) {
                    lex_.take();
                    else_c = mk_seq(stmts_until({Tok::KwEnd}));
                }
                expect(Tok::KwEnd, "'end'");
                return mk_if(std::move(g), mk_seq(std::move(then_c)), std::move(else_c));
            }
            case Tok::KwWhile: {
                lex_.take();
                ExprPtr g = expr();
                expect(Tok::KwDo, "'do'");
                std::vector<CmdPtr> body = stmts_until({Tok::KwEnd});
                expect(Tok::KwEnd, "'end'");
                return mk_while(std::move(g), mk_seq(std::move(body)));
            }
            case Tok::Ident: {
                Token x = lex_.take();
                require_declared(x);
                if (lex_.peek().kind == Tok::Assign) {
                    lex_.take();
                    ExprPtr e = expr();
                    expect(Tok::Semi, "';'");
                    return mk_assign(x.text, std::move(e));
                }
                if (lex_.peek().kind == Tok::SampleArrow) {
                    lex_.take();
                    Token fn = lex_.take();
                    CmdKind kind;
                    if (fn.kind == Tok::KwLap) kind = CmdKind::SampleLap;
                    else if (fn.kind == Tok::KwOslap) kind = CmdKind::SampleOsLap;
                    else fail(fn, "'lap' or 'oslap'");
                    expect(Tok::LParen, "'('");
                    Rat s = scale();
                    expect(Tok::Comma, "','");
                    ExprPtr center = expr();
                    expect(Tok::RParen, "')'");
                    expect(Tok::Semi, "';'");
                    if (!(Rat(0) < s)) fail(fn, "positive sampling scale");
                    return mk_sample(kind, x.text, s, std::move(center));
                }
                fail(lex_.peek(), "':=' or '<-$'");
            }
            default: fail(t, "statement");
        }
    }

    // scale := eps | eps/INT | INT*eps | INT*eps/INT
    Rat scale() {
        std::int64_t num = 1, den = 1;
        if (lex_.peek().kind == Tok::Int) {
            num = lex_.take().ival;
            expect(Tok::Star, "'*'");
        }
        expect(Tok::KwEps, "'eps'");
        if (lex_.peek().kind == Tok::Slash) {
            lex_.take();
            den = expect(Tok::Int, "integer").ival;
        }
        return Rat(num, den);
    }

    ExprPtr expr() { return or_expr(); }

    ExprPtr or_expr() {
        ExprPtr e = and_expr();
        while (lex_.peek().kind == Tok::OrOr) {
            lex_.take();
            e = mk_expr(ExprKind::Or, {e, and_expr()});
        }
        return e;
    }

    ExprPtr and_expr() {
        ExprPtr e = not_expr();
        while (lex_.peek().kind == Tok::AndAnd) {
            lex_.take();
            e = mk_expr(ExprKind::And, {e, not_expr()});
        }
        return e;
    }

    ExprPtr not_expr() {
        if (lex_.peek().kind == Tok::Bang) {
            lex_.take();
            return mk_expr(ExprKind::Not, {not_expr()});
        }
        return cmp_expr();
    }

    ExprPtr cmp_expr() {
        ExprPtr e = add_expr();
        switch (lex_.peek().kind) {
            case Tok::EqEq: lex_.take(); return mk_expr(ExprKind::Eq, {e, add_expr()});
            case Tok::Ne: lex_.take(); return mk_expr(ExprKind::Ne, {e, add_expr()});
            case Tok::Le: lex_.take(); return mk_expr(ExprKind::Le, {e, add_expr()});
            case Tok::Lt: lex_.take(); return mk_expr(ExprKind::Lt, {e, add_expr()});
            case Tok::Ge: { // a >= b is stored as b <= a
                lex_.take();
                return mk_expr(ExprKind::Le, {add_expr(), e});
            }
            case Tok::Gt: {
                lex_.take();
                return mk_expr(ExprKind::Lt, {add_expr(), e});
            }
            default: return e;
        }
    }

    ExprPtr add_expr() {
        ExprPtr e = mul_expr();
        while (true) {
            if (lex_.peek().kind == Tok::Plus) {
                lex_.take();
                e = mk_expr(ExprKind::Add, {e, mul_expr()});
            } else if (lex_.peek().kind == Tok::Minus) {
                lex_.take();
                e = mk_expr(ExprKind::Sub, {e, mul_expr()});
            } else {
                return e;
            }
        }
    }

    ExprPtr mul_expr() {
        ExprPtr e = unary_expr();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            e = mk_expr(ExprKind::Mul, {e, unary_expr()});
        }
        return e;
    }

    ExprPtr unary_expr() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            if (lex_.peek().kind == Tok::Int) return int_lit(-lex_.take().ival);
            return mk_expr(ExprKind::Sub, {int_lit(0), unary_expr()});
        }
        return postfix_expr();
    }

    ExprPtr postfix_expr() {
        ExprPtr e = atom();
        while (lex_.peek().kind == Tok::LBracket) {
            lex_.take();
            ExprPtr idx = expr();
            expect(Tok::RBracket, "']'");
            e = mk_expr(ExprKind::Index, {e, idx});
        }
        return e;
    }

    ExprPtr atom() {
        const Token t = lex_.take();
        switch (t.kind) {
            case Tok::Int: return int_lit(t.ival);
            case Tok::KwTrue: return bool_lit(true);
            case Tok::KwFalse: return bool_lit(false);
            case Tok::Ident: require_declared(t); return var_ref(t.text);
            case Tok::LParen: {
                ExprPtr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Pipe: {
                ExprPtr e = expr();
                expect(Tok::Pipe, "'|'");
                return mk_expr(ExprKind::Len, {e});
            }
            case Tok::KwAbs: {
                expect(Tok::LParen, "'('");
                ExprPtr e = expr();
                expect(Tok::RParen, "')'");
                return mk_expr(ExprKind::Abs, {e});
            }
            case Tok::KwEvalQ: {
                expect(Tok::LParen, "'('");
                ExprPtr q = expr();
                expect(Tok::Comma, "','");
                ExprPtr d = expr();
                expect(Tok::RParen, "')'");
                return mk_expr(ExprKind::EvalQ, {q, d});
            }
            default: fail(t, "expression");
        }
    }

    void require_declared(const Token& t) {
        if (check_decls_ && !declared_.count(t.text))
            throw SyntaxError(t.line, t.col, "undeclared variable '" + t.text + "'");
    }

    Token expect(Tok k, const std::string& what) {
        Token t = lex_.take();
        if (t.kind != k) fail(t, what);
        return t;
    }

    [[noreturn]] void fail(const Token& t, const std::string& what) {
        throw SyntaxError(t.line, t.col, "expected " + what);
    }

    Lexer lex_;
    bool check_decls_;
    std::set<std::string> declared_;
};

} // namespace

Program parse_program(const std::string& text) { return Parser(text, true).program(); }

ExprPtr parse_expr_string(const std::string& text) { return Parser(text, false).expr_only(); }

} // namespace pwv
