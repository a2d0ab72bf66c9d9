// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pwv/lang.hpp"

#include <stdexcept>

namespace pwv {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Denotational value of a well-typed expression; total except for indexing
// outside the declared range, which raises EvalError.
Value eval_expr(const Expr& e, const Memory& m);

std::int64_t eval_int(const Expr& e, const Memory& m);
bool eval_bool(const Expr& e, const Memory& m);

} // namespace pwv
