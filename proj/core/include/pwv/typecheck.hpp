// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pwv/lang.hpp"

#include <string>
#include <vector>

namespace pwv {

struct TypeError {
    std::string where; // offending expression or command, pretty-printed
    std::string message;
};

// Computes the static type of a well-typed expression; appends to errors and
// returns Ty::Int as a recovery type otherwise. Every expression has a unique
// static type under the declaration table.
Ty type_of(const Expr& e, const DeclTable& decls, std::vector<TypeError>* errors);

// Empty result means the program typechecks: guards are bool, assignment
// types match, sampling centers and targets are int.
std::vector<TypeError> typecheck(const Program& p);
std::vector<TypeError> typecheck_command(const Command& c, const DeclTable& decls);

} // namespace pwv
