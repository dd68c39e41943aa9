#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "dengue/moea/dominance.hpp"
#include "dengue/moea/rng.hpp"
#include "dengue/moea/types.hpp"
#include "dengue/moea/variation.hpp"

namespace dengue::baselines {

using moea::Evaluator;
using moea::GenerationLog;
using moea::ObjectiveVector;
using moea::Rng;
using moea::Solution;

struct Nsga2Config {
    std::size_t pop_size = 100;  // must be even
    double p_c = 0.9;
    double eta_c = 20.0;
    double eta_m = 20.0;
    std::size_t max_evals = 100000;
};

namespace detail {

struct RankedPopulation {
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
};

inline RankedPopulation rank_and_crowd(const std::vector<Solution>& pop)
{
    std::vector<ObjectiveVector> fs(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        fs[i] = pop[i].f;
    }
    RankedPopulation out;
    out.rank = moea::fast_nondominated_sort(fs);
    out.crowding.assign(pop.size(), 0.0);

    const std::size_t levels =
        pop.empty() ? 0 : *std::max_element(out.rank.begin(), out.rank.end()) + 1;
    for (std::size_t level = 0; level < levels; ++level) {
        std::vector<std::size_t> idx;
        std::vector<ObjectiveVector> front;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (out.rank[i] == level) {
                idx.push_back(i);
                front.push_back(fs[i]);
            }
        }
        const auto cd = moea::crowding_distance(front);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            out.crowding[idx[k]] = cd[k];
        }
    }
    return out;
}

inline std::size_t crowded_tournament(const RankedPopulation& rp, std::size_t a,
                                      std::size_t b)
{
    if (rp.rank[a] != rp.rank[b]) {
        return rp.rank[a] < rp.rank[b] ? a : b;
    }
    return rp.crowding[a] >= rp.crowding[b] ? a : b;
}

/// Elitist (mu + lambda) truncation: whole fronts first, the split front by
/// descending crowding distance.
inline std::vector<Solution> truncate_by_rank_crowding(std::vector<Solution> combined,
                                                       std::size_t mu)
{
    const auto rp = rank_and_crowd(combined);
    std::vector<std::size_t> order(combined.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rp.rank[a] != rp.rank[b]) {
            return rp.rank[a] < rp.rank[b];
        }
        return rp.crowding[a] > rp.crowding[b];
    });
    std::vector<Solution> next;
    next.reserve(mu);
    for (std::size_t k = 0; k < mu; ++k) {
        next.push_back(std::move(combined[order[k]]));
    }
    return next;
}

}  // namespace detail

inline std::vector<Solution> nsga2_run(const moea::Problem& problem, const Nsga2Config& cfg,
                                       Rng& rng, GenerationLog* log = nullptr)
{
    Evaluator ev(problem, cfg.max_evals);
    const double p_m = 1.0 / static_cast<double>(problem.dim);

    std::vector<Solution> pop;
    for (auto& x : moea::latin_hypercube_init(cfg.pop_size, problem.dim, rng)) {
        Solution s;
        s.f = ev.evaluate(x);
        s.x = std::move(x);
        pop.push_back(std::move(s));
    }

    std::size_t gen = 0;
    while (!ev.exhausted()) {
        const auto rp = detail::rank_and_crowd(pop);
        std::vector<Solution> offspring;
        offspring.reserve(cfg.pop_size);
        while (offspring.size() < cfg.pop_size && !ev.exhausted()) {
            const std::size_t p1 = detail::crowded_tournament(
                rp, moea::uniform_index(rng, pop.size()), moea::uniform_index(rng, pop.size()));
            const std::size_t p2 = detail::crowded_tournament(
                rp, moea::uniform_index(rng, pop.size()), moea::uniform_index(rng, pop.size()));
            auto [c1, c2] = moea::sbx_crossover(pop[p1].x, pop[p2].x, cfg.eta_c, cfg.p_c, rng);
            for (auto* cx : {&c1, &c2}) {
                if (offspring.size() >= cfg.pop_size || ev.exhausted()) {
                    break;
                }
                Solution child;
                child.x = moea::polynomial_mutation(*cx, cfg.eta_m, p_m, rng);
                child.f = ev.evaluate(child.x);
                offspring.push_back(std::move(child));
            }
        }
        std::vector<Solution> combined = pop;
        for (auto& c : offspring) {
            combined.push_back(std::move(c));
        }
        pop = detail::truncate_by_rank_crowding(std::move(combined), cfg.pop_size);
        ++gen;
        if (log) {
            log->record(gen, ev, pop.size(), 0);
        }
    }
    return moea::nondominated_filter(pop);
}

}  // namespace dengue::baselines
