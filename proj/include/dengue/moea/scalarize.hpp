#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dengue/moea/types.hpp"

namespace dengue::moea {

using WeightVector = std::array<double, 2>;

/// Evenly spaced 2-D weight vectors: w_j = ((j-1)/(mu-1), 1 - (j-1)/(mu-1)).
inline std::vector<WeightVector> generate_weights(std::size_t count)
{
    if (count < 2) {
        throw std::invalid_argument("generate_weights: need at least 2 vectors");
    }
    std::vector<WeightVector> w(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double a = static_cast<double>(j) / static_cast<double>(count - 1);
        w[j] = {a, 1.0 - a};
    }
    return w;
}

/// Per-objective min-max normalization over the population. A degenerate
/// column (max == min) normalizes to all zeros.
inline std::vector<ObjectiveVector> normalize_objectives(const std::vector<ObjectiveVector>& fs)
{
    if (fs.empty()) {
        throw std::invalid_argument("normalize_objectives: empty population");
    }
    ObjectiveVector lo = fs[0];
    ObjectiveVector hi = fs[0];
    for (const auto& f : fs) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            lo[i] = std::min(lo[i], f[i]);
            hi[i] = std::max(hi[i], f[i]);
        }
    }
    std::vector<ObjectiveVector> out(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) {
        for (std::size_t i = 0; i < fs[k].size(); ++i) {
            out[k][i] = hi[i] > lo[i] ? (fs[k][i] - lo[i]) / (hi[i] - lo[i]) : 0.0;
        }
    }
    return out;
}

/// Weighted Chebyshev fitness on normalized objectives: max_i w_i * fbar_i.
inline double chebyshev_fitness(const ObjectiveVector& fbar, const WeightVector& w)
{
    double v = w[0] * fbar[0];
    for (std::size_t i = 1; i < fbar.size(); ++i) {
        v = std::max(v, w[i] * fbar[i]);
    }
    return v;
}

}  // namespace dengue::moea
