// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pwv/eval.hpp"
#include "pwv/lang.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>

namespace pwv {

// Quantifier-free relational assertions over tagged expressions: program
// variables carry side tag <1> or <2>, logical variables are untagged
// integers bound by the proof script. adj and sens1 are built-in atoms of
// the database model.
enum class AKind {
    IntLit, BoolLit, TaggedVar, LogicalVar,
    Add, Sub, Mul, Abs,
    Eq, Ne, Le, Lt,
    And, Or, Not, Implies,
    Len, Index, EvalQ,
    Adj,   // adj(d<1>, d<2>): componentwise distance <= 1
    Sens1, // sens1(Q<1>, d<1>, d<2>): every query 1-sensitive on this pair
};

struct AExpr;
using AExprPtr = std::shared_ptr<const AExpr>;
using RelAssertion = AExprPtr;

struct AExpr {
    AKind kind;
    std::int64_t ival = 0;
    int side = 0; // TaggedVar: 1 or 2
    std::string name;
    std::vector<AExprPtr> args;
};

// Constructors.
AExprPtr a_int(std::int64_t v);
AExprPtr a_bool(bool b);
AExprPtr a_tagged(int side, std::string name);
AExprPtr a_logical(std::string name);
AExprPtr a_node(AKind k, std::vector<AExprPtr> args);
AExprPtr a_and(AExprPtr a, AExprPtr b);
AExprPtr a_conj(std::vector<AExprPtr> parts); // true when empty
AExprPtr a_or(AExprPtr a, AExprPtr b);
AExprPtr a_not(AExprPtr a);
AExprPtr a_implies(AExprPtr a, AExprPtr b);
AExprPtr a_eq(AExprPtr a, AExprPtr b);
AExprPtr a_le(AExprPtr a, AExprPtr b);
AExprPtr a_lt(AExprPtr a, AExprPtr b);
AExprPtr a_add(AExprPtr a, AExprPtr b);
AExprPtr a_sub(AExprPtr a, AExprPtr b);
AExprPtr a_abs(AExprPtr a);

bool a_equal(const AExpr& a, const AExpr& b);
std::string print_assertion(const AExpr& a);
RelAssertion parse_assertion(const std::string& text);

// Program expression with every variable tagged to one side.
AExprPtr tag_expr(const Expr& e, int side);

using LogEnv = std::map<std::string, std::int64_t>;

// First-order evaluation over a pair of memories plus logical bindings.
// Unbound logical variables raise EvalError.
Value eval_aexpr(const AExpr& a, const Memory& m1, const Memory& m2, const LogEnv& env);
bool assertion_eval(const AExpr& a, const Memory& m1, const Memory& m2,
                    const LogEnv& env = {});

// Capture-free substitution of tagged occurrences of x on one side.
RelAssertion substitute(const RelAssertion& a, int side, const std::string& x, const Expr& e);

// Replaces a logical variable by an integer literal and folds literal
// arithmetic, so instantiated templates compare equal to constructed
// obligations.
AExprPtr subst_logical(const AExprPtr& a, const std::string& name, std::int64_t v);

void tagged_vars_into(const AExpr& a, int side, std::set<std::string>& out);
std::set<std::string> tagged_vars(const AExpr& a, int side);
std::set<std::string> logical_vars(const AExpr& a);

// Flattened conjunction view (nested Ands in order).
void conjuncts_into(const AExprPtr& a, std::vector<AExprPtr>& out);

// Static type of an assertion subterm; logical variables are int. Appends
// mismatches to errors when non-null.
Ty atype_of(const AExpr& a, const DeclTable& decls, std::vector<std::string>* errors);

} // namespace pwv
