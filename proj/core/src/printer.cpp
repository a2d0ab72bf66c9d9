// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/printer.hpp"

#include <sstream>

namespace pwv {

namespace {

// Binding strength, loosest first. Parentheses are emitted whenever a child
// binds no tighter than its context requires, so printing is unambiguous and
// reparses to the same tree.
int prec(ExprKind k) {
    switch (k) {
        case ExprKind::Or: return 1;
        case ExprKind::And: return 2;
        case ExprKind::Not: return 3;
        case ExprKind::Eq:
        case ExprKind::Ne:
        case ExprKind::Le:
        case ExprKind::Lt: return 4;
        case ExprKind::Add:
        case ExprKind::Sub: return 5;
        case ExprKind::Mul: return 6;
        default: return 7;
    }
}

void emit(const Expr& e, int ctx, std::ostringstream& os) {
    int p = prec(e.kind);
    bool paren = p < ctx;
    bool is_cmp = e.kind == ExprKind::Eq || e.kind == ExprKind::Ne ||
                  e.kind == ExprKind::Le || e.kind == ExprKind::Lt;
    auto bin = [&](const char* op) {
        if (paren) os << "(";
        // Comparisons do not chain, so nested comparisons always get parens.
        emit(*e.args[0], is_cmp ? p + 1 : p, os);
        os << " " << op << " ";
        emit(*e.args[1], p + 1, os); // left associative
        if (paren) os << ")";
    };
    switch (e.kind) {
        case ExprKind::IntLit: os << e.ival; break;
        case ExprKind::BoolLit: os << (e.ival ? "true" : "false"); break;
        case ExprKind::Var: os << e.var; break;
        case ExprKind::Add: bin("+"); break;
        case ExprKind::Sub: bin("-"); break;
        case ExprKind::Mul: bin("*"); break;
        case ExprKind::Eq: bin("=="); break;
        case ExprKind::Ne: bin("!="); break;
        case ExprKind::Le: bin("<="); break;
        case ExprKind::Lt: bin("<"); break;
        case ExprKind::And: bin("&&"); break;
        case ExprKind::Or: bin("||"); break;
        case ExprKind::Not:
            if (paren) os << "(";
            os << "!";
            emit(*e.args[0], p, os);
            if (paren) os << ")";
            break;
        case ExprKind::Abs:
            os << "abs(";
            emit(*e.args[0], 0, os);
            os << ")";
            break;
        case ExprKind::Len:
            os << "|";
            emit(*e.args[0], 0, os);
            os << "|";
            break;
        case ExprKind::Index:
            emit(*e.args[0], 7, os);
            os << "[";
            emit(*e.args[1], 0, os);
            os << "]";
            break;
        case ExprKind::EvalQ:
            os << "evalQ(";
            emit(*e.args[0], 0, os);
            os << ", ";
            emit(*e.args[1], 0, os);
            os << ")";
            break;
    }
}

std::string pad(int n) { return std::string(std::size_t(n) * 2, ' '); }

} // namespace

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    emit(e, 0, os);
    return os.str();
}

std::string print_scale(const Rat& s) {
    std::ostringstream os;
    if (s.num() != 1) os << s.num() << "*";
    os << "eps";
    if (s.den() != 1) os << "/" << s.den();
    return os.str();
}

std::string print_command(const Command& c, int indent) {
    std::ostringstream os;
    switch (c.kind) {
        case CmdKind::Skip: os << pad(indent) << "skip;\n"; break;
        case CmdKind::Assign:
            os << pad(indent) << c.var << " := " << print_expr(*c.expr) << ";\n";
            break;
        case CmdKind::SampleLap:
        case CmdKind::SampleOsLap:
            os << pad(indent) << c.var << " <-$ "
               << (c.kind == CmdKind::SampleLap ? "lap" : "oslap") << "("
               << print_scale(c.scale) << ", " << print_expr(*c.expr) << ");\n";
            break;
        case CmdKind::Seq:
            os << print_command(*c.c1, indent) << print_command(*c.c2, indent);
            break;
        case CmdKind::If:
            os << pad(indent) << "if " << print_expr(*c.expr) << " then\n";
            os << print_command(*c.c1, indent + 1);
            if (c.c2 && c.c2->kind != CmdKind::Skip) {
                os << pad(indent) << "else\n" << print_command(*c.c2, indent + 1);
            }
            os << pad(indent) << "end\n";
            break;
        case CmdKind::While:
            os << pad(indent) << "while " << print_expr(*c.expr) << " do\n";
            os << print_command(*c.c1, indent + 1);
            os << pad(indent) << "end\n";
            break;
    }
    return os.str();
}

std::string print_program(const Program& p) {
    std::ostringstream os;
    for (const Decl& d : p.decls.decls()) {
        os << "var " << d.name << " : ";
        switch (d.type) {
            case Ty::Int: os << "int in [" << d.lo << ", " << d.hi << "]"; break;
            case Ty::Bool: os << "bool"; break;
            case Ty::Db: os << "db(" << d.dim << ") in [" << d.lo << ", " << d.hi << "]"; break;
            case Ty::QueryList: os << "querylist(" << d.dim << ")"; break;
            case Ty::Query: os << "query(" << d.dim << ")"; break;
        }
        os << ";\n";
    }
    os << "\n" << print_command(*p.body, 0);
    os << "return " << p.return_var << "\n";
    return os.str();
}

} // namespace pwv
