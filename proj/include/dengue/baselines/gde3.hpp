#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "dengue/baselines/nsga2.hpp"
#include "dengue/moea/dominance.hpp"
#include "dengue/moea/rng.hpp"
#include "dengue/moea/types.hpp"
#include "dengue/moea/variation.hpp"

namespace dengue::baselines {

struct Gde3Config {
    std::size_t pop_size = 100;
    double F = 0.5;
    double CR = 0.5;
    std::size_t max_evals = 100000;
};

/// Unconstrained GDE3 selection: the trial replaces the target when it
/// weakly dominates it; the target survives alone when it dominates the
/// trial; otherwise both are kept and the population is truncated at the
/// end of the generation by nondominated sorting plus crowding distance.
inline std::vector<moea::Solution> gde3_run(const moea::Problem& problem,
                                            const Gde3Config& cfg, moea::Rng& rng,
                                            moea::GenerationLog* log = nullptr)
{
    moea::Evaluator ev(problem, cfg.max_evals);

    std::vector<moea::Solution> pop;
    for (auto& x : moea::latin_hypercube_init(cfg.pop_size, problem.dim, rng)) {
        moea::Solution s;
        s.f = ev.evaluate(x);
        s.x = std::move(x);
        pop.push_back(std::move(s));
    }

    std::size_t gen = 0;
    while (!ev.exhausted()) {
        std::vector<moea::Solution> extra;
        for (std::size_t i = 0; i < cfg.pop_size && !ev.exhausted(); ++i) {
            // three distinct donors, all different from the target
            std::size_t r1;
            std::size_t r2;
            std::size_t r3;
            do {
                r1 = moea::uniform_index(rng, cfg.pop_size);
            } while (r1 == i);
            do {
                r2 = moea::uniform_index(rng, cfg.pop_size);
            } while (r2 == i || r2 == r1);
            do {
                r3 = moea::uniform_index(rng, cfg.pop_size);
            } while (r3 == i || r3 == r1 || r3 == r2);

            moea::Solution trial;
            trial.x = moea::de_rand_1_bin(pop[i].x, pop[r1].x, pop[r2].x, pop[r3].x,
                                          cfg.F, cfg.CR, rng);
            trial.f = ev.evaluate(trial.x);

            if (moea::weakly_dominates(trial.f, pop[i].f)) {
                pop[i] = std::move(trial);
            } else if (!moea::dominates(pop[i].f, trial.f)) {
                extra.push_back(std::move(trial));
            }
        }
        if (!extra.empty()) {
            for (auto& s : extra) {
                pop.push_back(std::move(s));
            }
            pop = detail::truncate_by_rank_crowding(std::move(pop), cfg.pop_size);
        }
        ++gen;
        if (log) {
            log->record(gen, ev, pop.size(), 0);
        }
    }
    return moea::nondominated_filter(pop);
}

}  // namespace dengue::baselines
