// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pwv/analysis.hpp"
#include "pwv/distribution.hpp"
#include "pwv/lang.hpp"

#include <optional>

namespace pwv {

struct RadiusPolicy {
    // Fixed truncation radius, or the smallest radius whose two-sided tail
    // mass is below `auto_tol`.
    std::optional<std::int64_t> fixed;
    double auto_tol = 1e-9;

    static RadiusPolicy fixed_radius(std::int64_t r) { return RadiusPolicy{r, 0.0}; }
    static RadiusPolicy auto_radius(double tol) { return RadiusPolicy{std::nullopt, tol}; }
    std::int64_t radius_for(double scale_eps) const;
};

struct InterpConfig {
    std::int64_t max_loop_iterations = 200;
    RadiusPolicy radius = RadiusPolicy::auto_radius(1e-9);
    double eps_value = 1.0; // concrete value substituted for the symbolic eps
};

using MemDist = SubDistribution<Memory>;

struct InterpResult {
    MemDist dist;
    // Upper bound on the total mass moved by truncating the samplers, summed
    // over every sampling the run performed; surfaces as additive slack in
    // empirical checks.
    double truncation_budget = 0.0;
    double dropped_loop_mass = 0.0;
};

// Kozen-style denotational semantics: the sub-distribution over final
// memories. Loops unroll up to max_loop_iterations; unterminated mass is
// dropped.
MemDist interpret(const Program& p, const Memory& m0, const InterpConfig& cfg);

// Same semantics, but the result is collapsed onto `keep`: memories agreeing
// on the kept variables are merged (their other slots reset to canonical
// values). Dead variables are also collapsed at loop heads, which keeps
// intermediate supports small. Equals the pushforward of interpret() onto
// the kept coordinates.
InterpResult interpret_project(const Program& p, const Memory& m0, const InterpConfig& cfg,
                               const VarSet& keep);
InterpResult interpret_project(const DeclTable& decls, const Command& body, const Memory& m0,
                               const InterpConfig& cfg, const VarSet& keep);

// Pushforward along the return variable.
SubDistribution<Value> output_distribution(const Program& p, const Memory& m0,
                                           const InterpConfig& cfg);

} // namespace pwv
