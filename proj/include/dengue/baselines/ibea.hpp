#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "dengue/moea/dominance.hpp"
#include "dengue/moea/rng.hpp"
#include "dengue/moea/scalarize.hpp"
#include "dengue/moea/types.hpp"
#include "dengue/moea/variation.hpp"

namespace dengue::baselines {

struct IbeaConfig {
    std::size_t pop_size = 100;
    double kappa = 0.05;
    double p_c = 0.9;
    double eta_c = 20.0;
    double eta_m = 20.0;
    std::size_t max_evals = 100000;
};

/// Additive epsilon indicator: the smallest translation that makes `a`
/// weakly dominate `b`.
inline double epsilon_indicator(const moea::ObjectiveVector& a, const moea::ObjectiveVector& b)
{
    double eps = a[0] - b[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        eps = std::max(eps, a[i] - b[i]);
    }
    return eps;
}

namespace detail {

/// Fitness F(x) = sum_{y != x} -exp(-I(y, x) / kappa) on normalized
/// objectives; larger is better.
inline std::vector<double> ibea_fitness(const std::vector<moea::ObjectiveVector>& fbar,
                                        double kappa)
{
    const std::size_t n = fbar.size();
    std::vector<double> fit(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (y != x) {
                fit[x] -= std::exp(-epsilon_indicator(fbar[y], fbar[x]) / kappa);
            }
        }
    }
    return fit;
}

/// Iteratively removes the worst-fitness member, updating the fitness of
/// the rest, until `mu` remain. Ties are broken by lowest index. Returns
/// surviving indices in ascending order.
inline std::vector<std::size_t> ibea_environmental_selection(
    const std::vector<moea::ObjectiveVector>& fbar, double kappa, std::size_t mu)
{
    auto fit = ibea_fitness(fbar, kappa);
    std::vector<bool> alive(fbar.size(), true);
    std::size_t count = fbar.size();
    while (count > mu) {
        std::size_t worst = fbar.size();
        for (std::size_t i = 0; i < fbar.size(); ++i) {
            if (alive[i] && (worst == fbar.size() || fit[i] < fit[worst])) {
                worst = i;
            }
        }
        alive[worst] = false;
        --count;
        for (std::size_t i = 0; i < fbar.size(); ++i) {
            if (alive[i]) {
                fit[i] += std::exp(-epsilon_indicator(fbar[worst], fbar[i]) / kappa);
            }
        }
    }
    std::vector<std::size_t> keep;
    keep.reserve(mu);
    for (std::size_t i = 0; i < fbar.size(); ++i) {
        if (alive[i]) {
            keep.push_back(i);
        }
    }
    return keep;
}

}  // namespace detail

inline std::vector<moea::Solution> ibea_run(const moea::Problem& problem,
                                            const IbeaConfig& cfg, moea::Rng& rng,
                                            moea::GenerationLog* log = nullptr)
{
    moea::Evaluator ev(problem, cfg.max_evals);
    const double p_m = 1.0 / static_cast<double>(problem.dim);

    std::vector<moea::Solution> pop;
    for (auto& x : moea::latin_hypercube_init(cfg.pop_size, problem.dim, rng)) {
        moea::Solution s;
        s.f = ev.evaluate(x);
        s.x = std::move(x);
        pop.push_back(std::move(s));
    }

    auto fitness_of = [&](const std::vector<moea::Solution>& p) {
        std::vector<moea::ObjectiveVector> fs(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            fs[i] = p[i].f;
        }
        return detail::ibea_fitness(moea::normalize_objectives(fs), cfg.kappa);
    };

    std::size_t gen = 0;
    auto fit = fitness_of(pop);
    while (!ev.exhausted()) {
        std::vector<moea::Solution> combined = pop;
        while (combined.size() < 2 * cfg.pop_size && !ev.exhausted()) {
            auto pick = [&] {
                const std::size_t a = moea::uniform_index(rng, pop.size());
                const std::size_t b = moea::uniform_index(rng, pop.size());
                return fit[a] >= fit[b] ? a : b;
            };
            auto [c1, c2] = moea::sbx_crossover(pop[pick()].x, pop[pick()].x, cfg.eta_c,
                                                cfg.p_c, rng);
            for (auto* cx : {&c1, &c2}) {
                if (combined.size() >= 2 * cfg.pop_size || ev.exhausted()) {
                    break;
                }
                moea::Solution child;
                child.x = moea::polynomial_mutation(*cx, cfg.eta_m, p_m, rng);
                child.f = ev.evaluate(child.x);
                combined.push_back(std::move(child));
            }
        }
        std::vector<moea::ObjectiveVector> fs(combined.size());
        for (std::size_t i = 0; i < combined.size(); ++i) {
            fs[i] = combined[i].f;
        }
        const auto keep = detail::ibea_environmental_selection(
            moea::normalize_objectives(fs), cfg.kappa, cfg.pop_size);
        std::vector<moea::Solution> next;
        next.reserve(keep.size());
        for (std::size_t i : keep) {
            next.push_back(std::move(combined[i]));
        }
        pop = std::move(next);
        fit = fitness_of(pop);
        ++gen;
        if (log) {
            log->record(gen, ev, pop.size(), 0);
        }
    }
    return moea::nondominated_filter(pop);
}

}  // namespace dengue::baselines
