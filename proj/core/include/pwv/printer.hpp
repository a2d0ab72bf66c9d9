// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pwv/lang.hpp"

#include <string>

namespace pwv {

std::string print_expr(const Expr& e);
std::string print_scale(const Rat& s); // "eps/2", "3*eps/4", "eps"
std::string print_command(const Command& c, int indent = 0);
std::string print_program(const Program& p);

} // namespace pwv
