// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pwv/lang.hpp"

#include <set>
#include <string>

namespace pwv {

using VarSet = std::set<std::string>;

VarSet free_vars(const Expr& e);
void free_vars_into(const Expr& e, VarSet& out);

// All assignment/sampling targets in c (an over-approximation of what may
// change).
VarSet modified_vars(const Command& c);

// Variables some execution may read before writing. These are the only
// initial-memory coordinates the semantics can depend on.
VarSet input_vars(const Command& c);

// Variables live before c given the set live after it.
VarSet live_before(const Command& c, const VarSet& live_after);

} // namespace pwv
