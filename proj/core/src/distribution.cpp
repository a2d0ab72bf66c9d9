// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pwv/distribution.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace pwv {

IntDist truncated_laplace(std::int64_t center, double scale_eps, std::int64_t radius) {
    if (scale_eps <= 0) throw std::invalid_argument("laplace scale must be positive");
    if (radius < 1) throw std::invalid_argument("laplace radius must be >= 1");
    std::vector<IntDist::Entry> ws;
    ws.reserve(std::size_t(2 * radius + 1));
    double z = 0.0;
    for (std::int64_t v = -radius; v <= radius; ++v)
        z += std::exp(-scale_eps * double(v < 0 ? -v : v));
    for (std::int64_t v = -radius; v <= radius; ++v)
        ws.emplace_back(center + v, std::exp(-scale_eps * double(v < 0 ? -v : v)) / z);
    return IntDist::from_weights(std::move(ws), /*mark_full=*/true);
}

IntDist truncated_oslaplace(std::int64_t center, double scale_eps, std::int64_t radius) {
    if (scale_eps <= 0) throw std::invalid_argument("oslaplace scale must be positive");
    if (radius < 1) throw std::invalid_argument("oslaplace radius must be >= 1");
    std::vector<IntDist::Entry> ws;
    ws.reserve(std::size_t(radius + 1));
    double z = 0.0;
    for (std::int64_t v = 0; v <= radius; ++v) z += std::exp(-scale_eps * double(v));
    for (std::int64_t v = 0; v <= radius; ++v)
        ws.emplace_back(center + v, std::exp(-scale_eps * double(v)) / z);
    return IntDist::from_weights(std::move(ws), /*mark_full=*/true);
}

double tail_mass(double scale_eps, std::int64_t radius) {
    if (scale_eps <= 0) throw std::invalid_argument("tail_mass: scale must be positive");
    double e = std::exp(-scale_eps);
    return 2.0 * std::exp(-scale_eps * double(radius + 1)) / (1.0 + e);
}

double os_tail_mass(double scale_eps, std::int64_t radius) {
    if (scale_eps <= 0) throw std::invalid_argument("os_tail_mass: scale must be positive");
    return std::exp(-scale_eps * double(radius + 1));
}

std::int64_t radius_for_tolerance(double scale_eps, double tol) {
    if (tol <= 0) throw std::invalid_argument("radius tolerance must be positive");
    // Closed-form estimate, then adjust to the exact threshold.
    double est = std::log(2.0 / (tol * (1.0 + std::exp(-scale_eps)))) / scale_eps - 1.0;
    std::int64_t r = std::max<std::int64_t>(1, std::int64_t(est) - 2);
    while (tail_mass(scale_eps, r) >= tol) ++r;
    while (r > 1 && tail_mass(scale_eps, r - 1) < tol) --r;
    return r;
}

std::string serialize_dist(const IntDist& d) {
    std::ostringstream os;
    char buf[64];
    for (const auto& [v, w] : d.entries()) {
        std::snprintf(buf, sizeof buf, "%.17g", w);
        os << v << "\t" << buf << "\n";
    }
    return os.str();
}

IntDist parse_dist(const std::string& text) {
    std::vector<IntDist::Entry> ws;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::int64_t v;
        double w;
        if (!(ls >> v >> w))
            throw std::invalid_argument("distribution file: bad line " +
                                        std::to_string(lineno) + ": " + line);
        ws.emplace_back(v, w);
    }
    return IntDist::from_weights(std::move(ws));
}

} // namespace pwv
