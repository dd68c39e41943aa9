#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "dengue/moea/dominance.hpp"
#include "dengue/moea/rng.hpp"
#include "dengue/moea/scalarize.hpp"
#include "dengue/moea/types.hpp"
#include "dengue/moea/variation.hpp"

namespace dengue::baselines {

struct MoeadConfig {
    std::size_t pop_size = 100;  // equals the number of weight vectors
    std::size_t T = 20;          // neighborhood size
    double p_nb = 0.9;           // mating-from-neighborhood probability
    std::size_t n_r = 2;         // replacement cap per child
    double F = 0.5;
    double CR = 1.0;
    double eta_m = 20.0;
    std::size_t max_evals = 100000;
};

namespace detail {

/// Chebyshev subproblem value with ideal-point translation; zero weights
/// are floored so extreme subproblems still see both objectives.
inline double moead_subproblem(const moea::ObjectiveVector& f, const moea::WeightVector& w,
                               const moea::ObjectiveVector& ideal)
{
    constexpr double kWeightFloor = 1e-6;
    double v = std::max(w[0], kWeightFloor) * std::abs(f[0] - ideal[0]);
    for (std::size_t i = 1; i < f.size(); ++i) {
        v = std::max(v, std::max(w[i], kWeightFloor) * std::abs(f[i] - ideal[i]));
    }
    return v;
}

/// Indices of the T nearest weight vectors (by Euclidean distance,
/// including the vector itself).
inline std::vector<std::vector<std::size_t>> moead_neighborhoods(
    const std::vector<moea::WeightVector>& weights, std::size_t T)
{
    std::vector<std::vector<std::size_t>> nb(weights.size());
    std::vector<std::size_t> order(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            auto d = [&](std::size_t j) {
                double s = 0.0;
                for (std::size_t k = 0; k < weights[i].size(); ++k) {
                    const double diff = weights[i][k] - weights[j][k];
                    s += diff * diff;
                }
                return s;
            };
            return d(a) < d(b);
        });
        nb[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(T));
    }
    return nb;
}

}  // namespace detail

/// MOEA/D-DE with Chebyshev decomposition, ideal-point tracking and a
/// replacement cap per child.
inline std::vector<moea::Solution> moead_run(const moea::Problem& problem,
                                             const MoeadConfig& cfg, moea::Rng& rng,
                                             moea::GenerationLog* log = nullptr)
{
    moea::Evaluator ev(problem, cfg.max_evals);
    const double p_m = 1.0 / static_cast<double>(problem.dim);
    const auto weights = moea::generate_weights(cfg.pop_size);
    const auto neighborhoods =
        detail::moead_neighborhoods(weights, std::min(cfg.T, cfg.pop_size));

    std::vector<moea::Solution> pop;
    moea::ObjectiveVector ideal{std::numeric_limits<double>::infinity(),
                                std::numeric_limits<double>::infinity()};
    for (auto& x : moea::latin_hypercube_init(cfg.pop_size, problem.dim, rng)) {
        moea::Solution s;
        s.f = ev.evaluate(x);
        s.x = std::move(x);
        ideal[0] = std::min(ideal[0], s.f[0]);
        ideal[1] = std::min(ideal[1], s.f[1]);
        pop.push_back(std::move(s));
    }

    std::size_t gen = 0;
    std::vector<std::size_t> whole(cfg.pop_size);
    std::iota(whole.begin(), whole.end(), std::size_t{0});
    while (!ev.exhausted()) {
        for (std::size_t i = 0; i < cfg.pop_size && !ev.exhausted(); ++i) {
            const bool local = moea::unit_uniform(rng) < cfg.p_nb;
            const std::vector<std::size_t>& pool = local ? neighborhoods[i] : whole;

            std::size_t r1;
            std::size_t r2;
            std::size_t r3;
            do {
                r1 = pool[moea::uniform_index(rng, pool.size())];
            } while (r1 == i && pool.size() > 1);
            do {
                r2 = pool[moea::uniform_index(rng, pool.size())];
            } while ((r2 == i || r2 == r1) && pool.size() > 2);
            do {
                r3 = pool[moea::uniform_index(rng, pool.size())];
            } while ((r3 == i || r3 == r1 || r3 == r2) && pool.size() > 3);

            moea::Solution child;
            child.x = moea::de_rand_1_bin(pop[i].x, pop[r1].x, pop[r2].x, pop[r3].x,
                                          cfg.F, cfg.CR, rng);
            child.x = moea::polynomial_mutation(child.x, cfg.eta_m, p_m, rng);
            child.f = ev.evaluate(child.x);
            ideal[0] = std::min(ideal[0], child.f[0]);
            ideal[1] = std::min(ideal[1], child.f[1]);

            // replace at most n_r incumbents the child improves on
            std::vector<std::size_t> visit = pool;
            std::shuffle(visit.begin(), visit.end(), rng);
            std::size_t replaced = 0;
            for (std::size_t j : visit) {
                if (replaced >= cfg.n_r) {
                    break;
                }
                if (detail::moead_subproblem(child.f, weights[j], ideal) <=
                    detail::moead_subproblem(pop[j].f, weights[j], ideal)) {
                    pop[j].x = child.x;
                    pop[j].f = child.f;
                    ++replaced;
                }
            }
        }
        ++gen;
        if (log) {
            log->record(gen, ev, pop.size(), 0);
        }
    }
    return moea::nondominated_filter(pop);
}

}  // namespace dengue::baselines
