// Copyright (c) pwv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwv {

inline constexpr double kMassTolerance = 1e-12;

// Finite-support weighted map from values to positive weights, total mass
// <= 1 (+ tolerance). Entries are kept sorted ascending by value so that
// iteration, serialization and accumulation order are deterministic.
template <class V>
class SubDistribution {
  public:
    using Entry = std::pair<V, double>;

    SubDistribution() = default;

    static SubDistribution point(V v) {
        SubDistribution d;
        d.entries_.emplace_back(std::move(v), 1.0);
        d.full_ = true;
        return d;
    }

    // Accumulates duplicate values, drops non-positive weights, sorts.
    static SubDistribution from_weights(std::vector<Entry> ws, bool mark_full = false) {
        std::map<V, double> acc;
        for (auto& [v, w] : ws) acc[std::move(v)] += w;
        SubDistribution d;
        d.entries_.reserve(acc.size());
        for (auto& [v, w] : acc)
            if (w > 0.0) d.entries_.emplace_back(v, w);
        d.check_mass();
        if (mark_full) d.set_full();
        return d;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    double mass() const {
        double m = 0.0;
        for (const auto& [v, w] : entries_) m += w;
        return m;
    }

    std::vector<V> support() const {
        std::vector<V> out;
        out.reserve(entries_.size());
        for (const auto& [v, w] : entries_) out.push_back(v);
        return out;
    }

    double weight(const V& v) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, const V& x) { return e.first < x; });
        if (it != entries_.end() && it->first == v) return it->second;
        return 0.0;
    }

    double prob(const std::function<bool(const V&)>& pred) const {
        double p = 0.0;
        for (const auto& [v, w] : entries_)
            if (pred(v)) p += w;
        return p;
    }

    bool is_full() const { return full_; }
    void set_full() {
        if (std::abs(mass() - 1.0) > kMassTolerance)
            throw std::invalid_argument("distribution flagged full has mass " +
                                        std::to_string(mass()));
        full_ = true;
    }

    // Divides every weight by the current mass.
    void normalize() {
        double m = mass();
        if (m <= 0.0) throw std::invalid_argument("cannot normalize empty distribution");
        for (auto& [v, w] : entries_) w /= m;
        full_ = true;
    }

    template <class F>
    auto map(F&& f) const { // pushforward along a value function
        using W = decltype(f(std::declval<const V&>()));
        std::map<W, double> acc;
        for (const auto& [v, w] : entries_) acc[f(v)] += w;
        SubDistribution<W> out;
        for (auto& [v, w] : acc)
            if (w > 0.0) out.mutable_entries().emplace_back(v, w);
        if (full_) out.set_full();
        return out;
    }

    std::vector<Entry>& mutable_entries() { return entries_; }

  private:
    void check_mass() const {
        if (mass() > 1.0 + kMassTolerance)
            throw std::invalid_argument("sub-distribution mass exceeds 1: " +
                                        std::to_string(mass()));
    }

    std::vector<Entry> entries_;
    bool full_ = false;
};

// (bind mu k)(w) = sum_v mu(v) * k(v)(w); mass never increases.
template <class V, class F>
auto bind(const SubDistribution<V>& mu, F&& k) {
    using W = typename decltype(k(std::declval<const V&>()))::Entry::first_type;
    std::map<W, double> acc;
    bool full = mu.is_full();
    for (const auto& [v, w] : mu.entries()) {
        auto d = k(v);
        if (!d.is_full()) full = false;
        for (const auto& [u, wu] : d.entries()) acc[u] += w * wu;
    }
    SubDistribution<W> out;
    for (auto& [u, w] : acc)
        if (w > 0.0) out.mutable_entries().emplace_back(u, w);
    if (full && !out.entries().empty() && std::abs(out.mass() - 1.0) <= kMassTolerance)
        out.set_full();
    return out;
}

template <class A, class B>
using PairDistribution = SubDistribution<std::pair<A, B>>;

template <class A, class B>
SubDistribution<A> marginal1(const PairDistribution<A, B>& mu) {
    return mu.map([](const std::pair<A, B>& p) { return p.first; });
}

template <class A, class B>
SubDistribution<B> marginal2(const PairDistribution<A, B>& mu) {
    return mu.map([](const std::pair<A, B>& p) { return p.second; });
}

// eps-DP divergence. For discrete sub-distributions the sup over events is
// attained at E = {b : mu1(b) > e^eps mu2(b)}, giving a positive-part sum.
template <class V>
double dp_divergence(const SubDistribution<V>& mu1, const SubDistribution<V>& mu2,
                     double eps) {
    if (eps < 0) throw std::invalid_argument("dp_divergence: negative epsilon");
    double scale = std::exp(eps);
    double total = 0.0;
    for (const auto& [v, w] : mu1.entries()) {
        double excess = w - scale * mu2.weight(v);
        if (excess > 0) total += excess;
    }
    return std::max(0.0, total);
}

// ---------------------------------------------------------------------------
// Truncated discrete Laplace builders (integer-valued)
// ---------------------------------------------------------------------------

using IntDist = SubDistribution<std::int64_t>;

// Support [center-R, center+R], weight(center+v) proportional to
// exp(-scale_eps*|v|), renormalized to mass 1.
IntDist truncated_laplace(std::int64_t center, double scale_eps, std::int64_t radius);

// One-sided: support [center, center+R], weights proportional to
// exp(-scale_eps*v) for v >= 0.
IntDist truncated_oslaplace(std::int64_t center, double scale_eps, std::int64_t radius);

// Mass the untruncated discrete Laplace puts outside [-R, R]:
// 2*exp(-eps*(R+1)) / (1 + exp(-eps)).
double tail_mass(double scale_eps, std::int64_t radius);

// One-sided analogue: exp(-eps*(R+1)).
double os_tail_mass(double scale_eps, std::int64_t radius);

// Smallest R >= 1 with tail_mass(scale_eps, R) < tol.
std::int64_t radius_for_tolerance(double scale_eps, double tol);

// One value<TAB>weight line per support point, ascending, 17 significant
// digits.
std::string serialize_dist(const IntDist& d);
IntDist parse_dist(const std::string& text);

} // namespace pwv
