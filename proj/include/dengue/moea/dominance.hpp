#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "dengue/moea/types.hpp"

namespace dengue::moea {

/// Pareto dominance for minimization: a <= b componentwise with at least
/// one strict inequality.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b)
{
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        if (a[i] < b[i]) {
            strict = true;
        }
    }
    return strict;
}

inline bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

/// Indices of members not dominated by any other member. Objective-space
/// duplicates are all retained.
inline std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& points)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            dominated = j != i && dominates(points[j], points[i]);
        }
        if (!dominated) {
            out.push_back(i);
        }
    }
    return out;
}

inline std::vector<Solution> nondominated_filter(const std::vector<Solution>& pop)
{
    std::vector<ObjectiveVector> fs(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        fs[i] = pop[i].f;
    }
    std::vector<Solution> out;
    for (std::size_t i : nondominated_indices(fs)) {
        out.push_back(pop[i]);
    }
    return out;
}

/// Nondomination rank per point: rank 0 is the nondominated set, rank k
/// the nondominated set after removing ranks < k.
inline std::vector<std::size_t> fast_nondominated_sort(const std::vector<ObjectiveVector>& points)
{
    const std::size_t n = points.size();
    std::vector<std::size_t> rank(n, 0);
    std::vector<std::size_t> dom_count(n, 0);
    std::vector<std::vector<std::size_t>> dominated_by(n);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated_by[i].push_back(j);
                ++dom_count[j];
            } else if (dominates(points[j], points[i])) {
                dominated_by[j].push_back(i);
                ++dom_count[i];
            }
        }
    }

    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (dom_count[i] == 0) {
            current.push_back(i);
        }
    }
    std::size_t level = 0;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            rank[i] = level;
            for (std::size_t j : dominated_by[i]) {
                if (--dom_count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        current = std::move(next);
        ++level;
    }
    return rank;
}

/// Canonical crowding distance within one front: boundary members get
/// +infinity, interior members accumulate normalized neighbor gaps.
inline std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front)
{
    const std::size_t n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        return dist;
    }
    const std::size_t m = front.empty() ? 0 : front[0].size();
    std::vector<std::size_t> order(n);
    for (std::size_t obj = 0; obj < m; ++obj) {
        for (std::size_t i = 0; i < n; ++i) {
            order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[a][obj] < front[b][obj];
        });
        const double lo = front[order.front()][obj];
        const double hi = front[order.back()][obj];
        dist[order.front()] = std::numeric_limits<double>::infinity();
        dist[order.back()] = std::numeric_limits<double>::infinity();
        if (hi == lo) {
            continue;
        }
        for (std::size_t i = 1; i + 1 < n; ++i) {
            dist[order[i]] += (front[order[i + 1]][obj] - front[order[i - 1]][obj]) / (hi - lo);
        }
    }
    return dist;
}

}  // namespace dengue::moea
