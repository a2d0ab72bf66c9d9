// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pwv/lang.hpp"

#include <stdexcept>
#include <string>

namespace pwv {

struct SyntaxError : std::runtime_error {
    int line, col;
    SyntaxError(int line_, int col_, const std::string& msg)
        : std::runtime_error("syntax error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

// Parses the .pwhile surface syntax:
//
//   var d : db(2) in [0, 2];
//   var t : int in [0, 1];
//   ...
//   T <-$ lap(eps/2, t);
//   while i <= |Q| do ... end
//   return r
//
// Undeclared variables are reported as syntax errors with position.
Program parse_program(const std::string& text);

// Expression entry point used by tests and the assertion parser; variables
// are not checked against any declaration table.
ExprPtr parse_expr_string(const std::string& text);

} // namespace pwv
