// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pwv/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pwv {

// ---------------------------------------------------------------------------
// Types and values
// ---------------------------------------------------------------------------

enum class Ty { Int, Bool, Db, QueryList, Query };

std::string ty_name(Ty t);

// A database is a fixed-length integer vector; queries are coordinate
// lookups, so a query value is just a 1-based coordinate index and a query
// list is determined by its length.
struct DbVec {
    std::vector<std::int64_t> entries;
    friend auto operator<=>(const DbVec&, const DbVec&) = default;
};

struct QueryListVal {
    std::int64_t length = 0;
    friend auto operator<=>(const QueryListVal&, const QueryListVal&) = default;
};

struct QueryVal {
    std::int64_t coord = 0; // 1-based
    friend auto operator<=>(const QueryVal&, const QueryVal&) = default;
};

using Value = std::variant<std::int64_t, bool, DbVec, QueryListVal, QueryVal>;

Ty value_type(const Value& v);
std::string value_str(const Value& v);

// ---------------------------------------------------------------------------
// Declarations and memories
// ---------------------------------------------------------------------------

// Every variable carries a finite range used for bounded enumeration
// (implication checking, input enumeration). Db entries range over
// [lo, hi] per coordinate; querylist declarations are a single value.
struct Decl {
    std::string name;
    Ty type = Ty::Int;
    std::int64_t lo = 0, hi = 0; // int range, or per-entry db range
    std::int64_t dim = 0;        // db length / querylist length
};

class DeclTable {
  public:
    int add(Decl d);
    const Decl* find(const std::string& name) const;
    int index_of(const std::string& name) const; // -1 if absent
    const std::vector<Decl>& decls() const { return decls_; }
    std::size_t size() const { return decls_.size(); }
    const Decl& at(std::size_t i) const { return decls_[i]; }
    friend bool operator==(const DeclTable&, const DeclTable&);

  private:
    std::vector<Decl> decls_;
    std::map<std::string, int> index_;
};

// Total assignment of declared variables, keyed by declaration order.
struct Memory {
    const DeclTable* decls = nullptr;
    std::vector<Value> slots;

    static Memory canonical(const DeclTable& t); // every slot at its range floor
    const Value& get(int idx) const { return slots[idx]; }
    void set(int idx, Value v) { slots[idx] = std::move(v); }
    friend bool operator==(const Memory& a, const Memory& b) { return a.slots == b.slots; }
    friend bool operator<(const Memory& a, const Memory& b) { return a.slots < b.slots; }
};

// Enumerates all values a declaration admits, ascending.
std::vector<Value> decl_domain(const Decl& d);

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class ExprKind {
    IntLit, BoolLit, Var,
    Add, Sub, Mul, Abs,
    Eq, Ne, Le, Lt,
    And, Or, Not,
    Len,   // |Q|
    Index, // d[e] or Q[e]
    EvalQ, // evalQ(q, d)
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    std::int64_t ival = 0;  // IntLit / BoolLit (0/1)
    std::string var;        // Var
    std::vector<ExprPtr> args;
};

ExprPtr int_lit(std::int64_t v);
ExprPtr bool_lit(bool b);
ExprPtr var_ref(std::string name);
ExprPtr mk_expr(ExprKind k, std::vector<ExprPtr> args);

bool expr_equal(const Expr& a, const Expr& b);

// ---------------------------------------------------------------------------
// Commands and programs
// ---------------------------------------------------------------------------

enum class CmdKind { Skip, Assign, SampleLap, SampleOsLap, Seq, If, While };

struct Command;
using CmdPtr = std::shared_ptr<const Command>;

struct Command {
    CmdKind kind;
    std::string var;  // Assign / Sample target
    ExprPtr expr;     // Assign rhs / sample center / guard
    Rat scale;        // sampling scale as a coefficient of the base epsilon
    CmdPtr c1, c2;    // Seq both; If then/else; While body in c1
};

CmdPtr mk_skip();
CmdPtr mk_assign(std::string x, ExprPtr e);
CmdPtr mk_sample(CmdKind kind, std::string x, Rat scale, ExprPtr center);
CmdPtr mk_seq(CmdPtr a, CmdPtr b);
CmdPtr mk_seq(std::vector<CmdPtr> cs);
CmdPtr mk_if(ExprPtr guard, CmdPtr then_c, CmdPtr else_c);
CmdPtr mk_while(ExprPtr guard, CmdPtr body);

bool command_equal(const Command& a, const Command& b);

// Sequencing is compared modulo associativity and skip elision: commands
// flatten to the list of primitive statements (Assign/Sample/If/While).
std::vector<const Command*> flatten(const Command& c);
bool flat_equal(const std::vector<const Command*>& a, const std::vector<const Command*>& b);

// A borrowed window into a flattened command list. The underlying AST must
// outlive the slice.
using CmdSlice = std::vector<const Command*>;

struct Program {
    DeclTable decls;
    CmdPtr body;
    std::string return_var;
};

} // namespace pwv
