#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dengue/moea/dominance.hpp"
#include "dengue/moea/types.hpp"

namespace dengue::metrics {

using moea::ObjectiveVector;

/// Exact 2-D hypervolume: the area dominated by the front and bounded by
/// ref. Points on or beyond the reference boundary contribute zero.
inline double hypervolume_2d(const std::vector<ObjectiveVector>& front,
                             const ObjectiveVector& ref)
{
    std::vector<ObjectiveVector> pts;
    pts.reserve(front.size());
    for (const auto& p : front) {
        if (p[0] < ref[0] && p[1] < ref[1]) {
            pts.push_back(p);
        }
    }
    std::sort(pts.begin(), pts.end());
    double hv = 0.0;
    double prev_f2 = ref[1];
    for (const auto& p : pts) {
        if (p[1] >= prev_f2) {
            continue;  // dominated by an earlier point
        }
        hv += (ref[0] - p[0]) * (prev_f2 - p[1]);
        prev_f2 = p[1];
    }
    return hv;
}

/// Hypervolume of the nondominated union of several fronts.
inline double total_hypervolume(const std::vector<std::vector<ObjectiveVector>>& fronts,
                                const ObjectiveVector& ref)
{
    if (fronts.empty()) {
        throw std::invalid_argument("total_hypervolume: need at least one front");
    }
    std::vector<ObjectiveVector> all;
    for (const auto& f : fronts) {
        all.insert(all.end(), f.begin(), f.end());
    }
    return hypervolume_2d(all, ref);
}

struct RunStatistics {
    std::vector<double> values;  // per-run hypervolume, input order
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double min = 0.0;
    double max = 0.0;
};

/// Linear-interpolation quantile of a sorted sample.
inline double interpolated_quantile(const std::vector<double>& sorted, double p)
{
    const double h = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) {
        return sorted.back();
    }
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

inline RunStatistics aggregate_runs(const std::vector<double>& hv_per_run)
{
    if (hv_per_run.empty()) {
        throw std::invalid_argument("aggregate_runs: empty input");
    }
    RunStatistics s;
    s.values = hv_per_run;
    std::vector<double> sorted = hv_per_run;
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.max = sorted.back();
    s.q1 = interpolated_quantile(sorted, 0.25);
    s.median = interpolated_quantile(sorted, 0.5);
    s.q3 = interpolated_quantile(sorted, 0.75);
    return s;
}

}  // namespace dengue::metrics
