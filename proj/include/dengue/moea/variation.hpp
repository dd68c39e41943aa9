#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dengue/moea/rng.hpp"

namespace dengue::moea {

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

inline void project_to_box(std::vector<double>& x)
{
    for (double& v : x) {
        v = clamp01(v);
    }
}

/// SBX spread factor for recombination draw u; beta(0.5) == 1 gives
/// children equal to parents.
inline double sbx_beta(double u, double eta_c)
{
    if (u <= 0.5) {
        return std::pow(2.0 * u, 1.0 / (eta_c + 1.0));
    }
    return std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta_c + 1.0));
}

/// Simulated binary crossover on [0,1]^n; children are projected to the box.
inline std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    const std::vector<double>& p1, const std::vector<double>& p2, double eta_c,
    double p_c, Rng& rng)
{
    std::vector<double> c1 = p1;
    std::vector<double> c2 = p2;
    if (unit_uniform(rng) <= p_c) {
        for (std::size_t i = 0; i < p1.size(); ++i) {
            if (unit_uniform(rng) > 0.5) {
                continue;
            }
            const double beta = sbx_beta(unit_uniform(rng), eta_c);
            c1[i] = clamp01(0.5 * ((1.0 + beta) * p1[i] + (1.0 - beta) * p2[i]));
            c2[i] = clamp01(0.5 * ((1.0 - beta) * p1[i] + (1.0 + beta) * p2[i]));
        }
    }
    return {std::move(c1), std::move(c2)};
}

/// Polynomial mutation perturbation for draw u; delta(0.5) == 0.
inline double polymut_delta(double u, double eta_m)
{
    if (u < 0.5) {
        return std::pow(2.0 * u, 1.0 / (eta_m + 1.0)) - 1.0;
    }
    return 1.0 - std::pow(2.0 * (1.0 - u), 1.0 / (eta_m + 1.0));
}

/// Polynomial mutation on [0,1]^n with per-variable probability p_m.
inline std::vector<double> polynomial_mutation(const std::vector<double>& x, double eta_m,
                                               double p_m, Rng& rng)
{
    std::vector<double> out = x;
    for (double& v : out) {
        if (unit_uniform(rng) <= p_m) {
            v = clamp01(v + polymut_delta(unit_uniform(rng), eta_m));
        }
    }
    return out;
}

/// DE/rand/1/bin trial vector: v = r1 + F (r2 - r3), binomial crossover
/// with rate CR and one guaranteed inherited coordinate, projected to box.
inline std::vector<double> de_rand_1_bin(const std::vector<double>& target,
                                         const std::vector<double>& r1,
                                         const std::vector<double>& r2,
                                         const std::vector<double>& r3, double F,
                                         double CR, Rng& rng)
{
    const std::size_t n = target.size();
    if (r1.size() != n || r2.size() != n || r3.size() != n) {
        throw std::invalid_argument("de_rand_1_bin: dimension mismatch");
    }
    std::vector<double> trial = target;
    const std::size_t jrand = uniform_index(rng, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == jrand || unit_uniform(rng) < CR) {
            trial[i] = clamp01(r1[i] + F * (r2[i] - r3[i]));
        }
    }
    return trial;
}

/// Latin hypercube sample of `count` points in [0,1]^dim: per dimension,
/// each of the `count` equal-width strata holds exactly one point, with an
/// independent stratum permutation per dimension.
inline std::vector<std::vector<double>> latin_hypercube_init(std::size_t count,
                                                             std::size_t dim, Rng& rng)
{
    if (count < 1 || dim < 1) {
        throw std::invalid_argument("latin_hypercube_init: count and dim must be >= 1");
    }
    std::vector<std::vector<double>> samples(count, std::vector<double>(dim));
    std::vector<std::size_t> perm(count);
    for (std::size_t d = 0; d < dim; ++d) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < count; ++i) {
            samples[i][d] = (static_cast<double>(perm[i]) + unit_uniform(rng)) /
                            static_cast<double>(count);
        }
    }
    return samples;
}

}  // namespace dengue::moea
