// Copyright (c) pwv contributors.
#include <memory>
// SPDX-License-Identifier: Apache-2.0
#include "pwv/lifting.hpp"

namespace pwv {

double min_feasible_delta(const IntDist& mu1, const IntDist& mu2,
                          const RelationOn<std::int64_t>& rel, double eps, double tol) {
    double lo = 0.0, hi = 1.0;
    if (approx_lifting(mu1, mu2, rel, eps, lo).feasible()) return 0.0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (approx_lifting(mu1, mu2, rel, eps, mid).feasible()) hi = mid;
        else lo = mid;
    }
    return hi;
}

RelationOn<std::int64_t> rel_eq() {
    RelationOn<std::int64_t> r;
    r.contains = [](std::int64_t a, std::int64_t b) { return a == b; };
    return r;
}

RelationOn<std::int64_t> rel_shift(std::int64_t k, const IntDist& mu1, const IntDist& mu2) {
    RelationOn<std::int64_t> r;
    r.contains = [k](std::int64_t a, std::int64_t b) { return a + k == b; };
    for (const auto& [v, w] : mu1.entries()) r.extra2.push_back(v + k);
    for (const auto& [v, w] : mu2.entries()) r.extra1.push_back(v - k);
    return r;
}

RelationOn<std::int64_t> rel_diff(std::int64_t c, const IntDist& mu1, const IntDist& mu2) {
    RelationOn<std::int64_t> r;
    r.contains = [c](std::int64_t a, std::int64_t b) { return a - b == c; };
    for (const auto& [v, w] : mu1.entries()) r.extra2.push_back(v - c);
    for (const auto& [v, w] : mu2.entries()) r.extra1.push_back(v + c);
    return r;
}

RelationOn<std::int64_t> rel_impl(std::int64_t b) {
    RelationOn<std::int64_t> r;
    r.contains = [b](std::int64_t x1, std::int64_t x2) { return x1 != b || x2 == b; };
    r.extra1.push_back(b);
    r.extra2.push_back(b);
    return r;
}

RelationOn<std::int64_t> rel_pairs(std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
    RelationOn<std::int64_t> r;
    auto set = std::make_shared<std::set<std::pair<std::int64_t, std::int64_t>>>(
        pairs.begin(), pairs.end());
    r.contains = [set](std::int64_t a, std::int64_t b) {
        return set->count(std::make_pair(a, b)) > 0;
    };
    for (const auto& [a, b] : pairs) {
        r.extra1.push_back(a);
        r.extra2.push_back(b);
    }
    return r;
}

RelationOn<std::int64_t> parse_relation(const std::string& spec, const IntDist& mu1,
                                        const IntDist& mu2) {
    if (spec == "eq") return rel_eq();
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::int64_t arg = std::stoll(spec.substr(colon + 1));
        if (kind == "shift") return rel_shift(arg, mu1, mu2);
        if (kind == "diff") return rel_diff(arg, mu1, mu2);
        if (kind == "impl") return rel_impl(arg);
    }
    throw std::invalid_argument("unknown relation spec: " + spec +
                                " (want eq, shift:k, diff:c, impl:b)");
}

} // namespace pwv
