#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <vector>

#include "dengue/moea/dominance.hpp"
#include "dengue/moea/rng.hpp"
#include "dengue/moea/scalarize.hpp"
#include "dengue/moea/types.hpp"
#include "dengue/moea/variation.hpp"

namespace dengue::ddmoa2 {

using moea::Evaluator;
using moea::GenerationLog;
using moea::ObjectiveVector;
using moea::Rng;
using moea::Solution;
using moea::WeightVector;

struct DdmoaConfig {
    std::size_t mu = 100;       // population size (also weight vector count)
    double delta0 = 0.4;        // initial local-search step
    double sigma0 = 5.0;        // initial reproduction step
    std::size_t alpha = 5;      // subpopulation count
    double delta_tol = 1e-3;    // step tolerance
    std::size_t max_evals = 100000;
};

/// Two descent directions, one per objective column. Shared between
/// individuals: non-leaders borrow a leader's matrix, fresh trials carry the
/// zero matrix (represented by a null pointer).
struct SearchMatrix {
    std::array<std::vector<double>, 2> col;
};

struct Individual {
    std::vector<double> x;
    ObjectiveVector f{};
    double delta = 0.4;
    double sigma = 5.0;
    std::shared_ptr<const SearchMatrix> search;  // nullptr == zero matrix
    bool is_leader = false;
};

/// Flags, per weight vector, the individual with the smallest Chebyshev
/// fitness on min-max-normalized objectives; ties go to the lowest index.
/// Returns the per-weight winner indices.
inline std::vector<std::size_t> select_leaders(std::vector<Individual>& pop,
                                               const std::vector<WeightVector>& weights)
{
    std::vector<ObjectiveVector> fs(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        fs[i] = pop[i].f;
        pop[i].is_leader = false;
    }
    const auto fbar = moea::normalize_objectives(fs);
    std::vector<std::size_t> winners(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j) {
        std::size_t best = 0;
        double best_fit = moea::chebyshev_fitness(fbar[0], weights[j]);
        for (std::size_t i = 1; i < pop.size(); ++i) {
            const double fit = moea::chebyshev_fitness(fbar[i], weights[j]);
            if (fit < best_fit) {
                best_fit = fit;
                best = i;
            }
        }
        winners[j] = best;
        pop[best].is_leader = true;
    }
    return winners;
}

struct CoordinateSearchResult {
    std::optional<std::vector<double>> direction;
    double delta;                 // possibly halved
    std::vector<Solution> trials; // probes nondominated w.r.t. the population
};

/// Derivative-free descent for one objective: a randomized pass probing
/// x +- delta*e_i, accumulating accepted moves. A fully unsuccessful pass
/// halves delta and repeats until success or delta <= delta_tol. Every probe
/// costs one evaluation; probes nondominated w.r.t. the current population
/// (tracked by `front`) are collected for insertion. `probe_cap` bounds the
/// number of evaluations spent here.
inline CoordinateSearchResult coordinate_search(const Individual& ind, std::size_t obj,
                                                moea::Pareto2dArchive& front,
                                                Evaluator& ev, double delta_tol,
                                                std::size_t probe_cap, Rng& rng)
{
    CoordinateSearchResult res;
    res.delta = ind.delta;

    const std::size_t n = ind.x.size();
    std::vector<double> y = ind.x;
    ObjectiveVector fy = ind.f;
    bool moved = false;
    bool last_accept_nondominated = false;
    std::size_t probes = 0;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    while (res.delta > delta_tol && probes < probe_cap && !ev.exhausted()) {
        std::shuffle(order.begin(), order.end(), rng);
        bool pass_success = false;
        for (std::size_t i : order) {
            for (double sign : {1.0, -1.0}) {
                if (probes >= probe_cap || ev.exhausted()) {
                    goto done;
                }
                const double probe_value = moea::clamp01(y[i] + sign * res.delta);
                if (probe_value == y[i]) {
                    continue;  // clamped onto the current point, nothing to evaluate
                }
                std::vector<double> trial = y;
                trial[i] = probe_value;
                const ObjectiveVector ft = ev.evaluate(trial);
                ++probes;
                const bool nondom = !front.weakly_dominated(ft);
                if (nondom) {
                    res.trials.push_back({trial, ft, ev.used()});
                    front.insert(ft);
                }
                if (ft[obj] < fy[obj]) {
                    y = std::move(trial);
                    fy = ft;
                    moved = true;
                    pass_success = true;
                    last_accept_nondominated = nondom;
                    break;  // next coordinate
                }
            }
        }
        if (pass_success) {
            break;
        }
        res.delta /= 2.0;
    }
done:
    if (moved && last_accept_nondominated) {
        std::vector<double> s(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = y[i] - ind.x[i];
        }
        res.direction = std::move(s);
    }
    return res;
}

namespace detail {

inline std::shared_ptr<SearchMatrix> mutable_matrix(Individual& ind, std::size_t n)
{
    // leaders get a fresh private matrix each generation
    auto m = std::make_shared<SearchMatrix>();
    m->col[0].assign(n, 0.0);
    m->col[1].assign(n, 0.0);
    ind.search = m;
    return m;
}

}  // namespace detail

/// Recomputes every individual's search matrix. For each of the two
/// objectives (taken in random column order), leaders are sorted ascending
/// by that objective and split into alpha near-equal parts; each part's
/// representative gets a coordinate-search direction and the other members
/// derive theirs from the representative. Non-leaders borrow a random
/// leader's matrix. Nondominated probes are appended to the population with
/// default strategy parameters, so the population usually grows here.
inline void update_search_matrices(std::vector<Individual>& pop, const DdmoaConfig& cfg,
                                   Evaluator& ev, Rng& rng)
{
    const std::size_t n = ev.dim();

    std::vector<std::size_t> leaders;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (pop[i].is_leader) {
            leaders.push_back(i);
        }
    }
    if (leaders.empty()) {
        return;
    }

    // dominance snapshot of the whole current population, updated as trials
    // are accepted during coordinate search
    moea::Pareto2dArchive front;
    for (const auto& ind : pop) {
        front.insert(ind.f);
    }

    std::array<std::size_t, 2> objectives{0, 1};
    std::shuffle(objectives.begin(), objectives.end(), rng);

    std::vector<std::shared_ptr<SearchMatrix>> fresh(leaders.size());
    for (std::size_t k = 0; k < leaders.size(); ++k) {
        fresh[k] = detail::mutable_matrix(pop[leaders[k]], n);
    }

    std::vector<Individual> inserted;

    for (std::size_t colpos = 0; colpos < 2; ++colpos) {
        const std::size_t obj = objectives[colpos];

        std::vector<std::size_t> order(leaders.size());  // positions into `leaders`
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pop[leaders[a]].f[obj] < pop[leaders[b]].f[obj];
        });

        // partition into alpha near-equal contiguous parts
        const std::size_t parts = std::min<std::size_t>(cfg.alpha, order.size());
        const std::size_t base = order.size() / parts;
        const std::size_t extra = order.size() % parts;
        std::size_t offset = 0;
        for (std::size_t p = 0; p < parts; ++p) {
            const std::size_t len = base + (p < extra ? 1 : 0);
            if (len == 0) {
                continue;
            }
            const auto part_begin = order.begin() + static_cast<std::ptrdiff_t>(offset);
            const auto part_end = part_begin + static_cast<std::ptrdiff_t>(len);
            offset += len;

            // representative: smallest objective value with delta above
            // tolerance, else the overall smallest with a zero direction
            std::size_t rep_pos = *part_begin;
            bool searchable = false;
            for (auto it = part_begin; it != part_end; ++it) {
                if (pop[leaders[*it]].delta > cfg.delta_tol) {
                    rep_pos = *it;
                    searchable = true;
                    break;
                }
            }
            Individual& rep = pop[leaders[rep_pos]];

            std::vector<double> s_r(n, 0.0);
            if (searchable) {
                const std::size_t cap =
                    std::min<std::size_t>(2 * n, ev.remaining() / 8);
                auto cs = coordinate_search(rep, obj, front, ev, cfg.delta_tol, cap, rng);
                rep.delta = cs.delta;
                if (cs.direction) {
                    s_r = std::move(*cs.direction);
                }
                for (auto& t : cs.trials) {
                    Individual fresh_ind;
                    fresh_ind.x = std::move(t.x);
                    fresh_ind.f = t.f;
                    fresh_ind.delta = cfg.delta0;
                    fresh_ind.sigma = cfg.sigma0;
                    fresh_ind.search = nullptr;  // zero matrix
                    inserted.push_back(std::move(fresh_ind));
                }
            }

            for (auto it = part_begin; it != part_end; ++it) {
                auto& col = fresh[*it]->col[colpos];
                if (*it == rep_pos) {
                    col = s_r;
                } else {
                    const auto& xi = pop[leaders[*it]].x;
                    for (std::size_t d = 0; d < n; ++d) {
                        col[d] = rep.x[d] - xi[d] + s_r[d];
                    }
                }
            }
        }
    }

    // non-leaders borrow the full matrix of a uniformly random leader
    for (auto& ind : pop) {
        if (!ind.is_leader) {
            ind.search = pop[leaders[moea::uniform_index(rng, leaders.size())]].search;
        }
    }

    for (auto& ind : inserted) {
        pop.push_back(std::move(ind));
    }
}

/// Reproduction step-size rule: exponential decay in the evaluation budget
/// with a lognormal per-individual factor, floored at delta_tol.
inline double reproduction_step_size(double sigma0, double tau, double normal_draw,
                                     std::size_t fun_eval, std::size_t max_evals,
                                     double delta_tol)
{
    const double exponent =
        1.0 - 3.0 * static_cast<double>(fun_eval) / static_cast<double>(max_evals);
    return std::max(std::exp(tau * normal_draw) * std::pow(sigma0, exponent), delta_tol);
}

inline void update_step_sizes(std::vector<Individual>& pop, const DdmoaConfig& cfg,
                              std::size_t fun_eval, double tau, Rng& rng)
{
    for (auto& ind : pop) {
        ind.sigma = reproduction_step_size(cfg.sigma0, tau, moea::standard_normal(rng),
                                           fun_eval, cfg.max_evals, cfg.delta_tol);
    }
}

struct TournamentRound {
    std::size_t weight;
    std::size_t a;
    std::size_t b;
    std::size_t winner;  // population index
};

/// Two-stage per-weight binary tournament: first among leaders, then among
/// the rest. Returns offspring slot counts per individual; the transcript,
/// when requested, records every round for independent replay.
inline std::vector<std::size_t> parent_selection(const std::vector<Individual>& pop,
                                                 const std::vector<WeightVector>& weights,
                                                 Rng& rng,
                                                 std::vector<TournamentRound>* transcript = nullptr)
{
    std::vector<ObjectiveVector> fs(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        fs[i] = pop[i].f;
    }
    const auto fbar = moea::normalize_objectives(fs);

    std::vector<std::size_t> leaders;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        (pop[i].is_leader ? leaders : others).push_back(i);
    }

    std::vector<std::size_t> counts(pop.size(), 0);
    auto stage = [&](const std::vector<std::size_t>& group) {
        if (group.empty()) {
            return;
        }
        for (std::size_t j = 0; j < weights.size(); ++j) {
            const std::size_t a = group[moea::uniform_index(rng, group.size())];
            const std::size_t b = group[moea::uniform_index(rng, group.size())];
            const double fa = moea::chebyshev_fitness(fbar[a], weights[j]);
            const double fb = moea::chebyshev_fitness(fbar[b], weights[j]);
            std::size_t win = fa < fb ? a : (fb < fa ? b : std::min(a, b));
            ++counts[win];
            if (transcript) {
                transcript->push_back({j, a, b, win});
            }
        }
    };
    stage(leaders);
    stage(others);
    return counts;
}

/// Offspring rule x' = x + sigma * S * nu with nu ~ U(0,1)^2, then
/// componentwise projection to the box.
inline std::vector<double> mutate_decision_vector(const Individual& ind, double nu0,
                                                  double nu1)
{
    std::vector<double> x = ind.x;
    if (ind.search) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = moea::clamp01(x[i] + ind.sigma * (ind.search->col[0][i] * nu0 +
                                                     ind.search->col[1][i] * nu1));
        }
    }
    return x;
}

/// Five-step weighted-Chebyshev truncation on a precomputed normalized
/// matrix. Column entries are scaled by the column minimum (the minimizing
/// row by the second smallest); row fitness is the minimum scaled value and
/// the mu smallest rows survive. Returns surviving indices in input order.
inline std::vector<std::size_t> environmental_select_from_normalized(
    const std::vector<ObjectiveVector>& fbar, const std::vector<WeightVector>& weights,
    std::size_t mu)
{
    const std::size_t P = fbar.size();
    if (P < mu) {
        throw std::invalid_argument("environmental_selection: population smaller than mu");
    }
    std::vector<std::size_t> all(P);
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (P == mu) {
        return all;
    }

    constexpr double kDenomFloor = 1e-12;
    std::vector<double> fitness(P, std::numeric_limits<double>::infinity());
    std::vector<double> column(P);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        std::size_t argmin = 0;
        for (std::size_t i = 0; i < P; ++i) {
            column[i] = moea::chebyshev_fitness(fbar[i], weights[j]);
            if (column[i] < column[argmin]) {
                argmin = i;
            }
        }
        double second = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < P; ++i) {
            if (i != argmin) {
                second = std::min(second, column[i]);
            }
        }
        const double min_div = std::max(column[argmin], kDenomFloor);
        const double second_div = std::max(second, kDenomFloor);
        for (std::size_t i = 0; i < P; ++i) {
            const double scaled = column[i] / (i == argmin ? second_div : min_div);
            fitness[i] = std::min(fitness[i], scaled);
        }
    }

    std::stable_sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
        return fitness[a] < fitness[b];
    });
    all.resize(mu);
    std::sort(all.begin(), all.end());
    return all;
}

inline void environmental_selection(std::vector<Individual>& pop,
                                    const std::vector<WeightVector>& weights, std::size_t mu)
{
    if (pop.size() <= mu) {
        return;
    }
    std::vector<ObjectiveVector> fs(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        fs[i] = pop[i].f;
    }
    const auto keep = environmental_select_from_normalized(moea::normalize_objectives(fs),
                                                           weights, mu);
    std::vector<Individual> next;
    next.reserve(mu);
    for (std::size_t i : keep) {
        next.push_back(std::move(pop[i]));
    }
    pop = std::move(next);
}

/// Full generation loop; returns the nondominated subset of the final
/// population.
inline std::vector<Solution> run(const moea::Problem& problem, const DdmoaConfig& cfg,
                                 Rng& rng, GenerationLog* log = nullptr)
{
    const std::size_t n = problem.dim;
    const double tau = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
    const auto weights = moea::generate_weights(cfg.mu);
    Evaluator ev(problem, cfg.max_evals);

    std::vector<Individual> pop;
    pop.reserve(cfg.mu);
    for (auto& x : moea::latin_hypercube_init(cfg.mu, n, rng)) {
        Individual ind;
        ind.f = ev.evaluate(x);
        ind.x = std::move(x);
        ind.delta = cfg.delta0;
        ind.sigma = cfg.sigma0;
        pop.push_back(std::move(ind));
    }

    std::size_t gen = 0;
    while (!ev.exhausted()) {
        select_leaders(pop, weights);
        std::size_t n_leaders = 0;
        for (const auto& ind : pop) {
            n_leaders += ind.is_leader ? 1 : 0;
        }

        update_search_matrices(pop, cfg, ev, rng);
        update_step_sizes(pop, cfg, ev.used(), tau, rng);

        const auto counts = parent_selection(pop, weights, rng);
        const std::size_t parents = pop.size();
        for (std::size_t i = 0; i < parents && !ev.exhausted(); ++i) {
            for (std::size_t k = 0; k < counts[i] && !ev.exhausted(); ++k) {
                Individual child = pop[i];
                child.x = mutate_decision_vector(pop[i], moea::unit_uniform(rng),
                                                 moea::unit_uniform(rng));
                child.f = ev.evaluate(child.x);
                child.is_leader = false;
                pop.push_back(std::move(child));
            }
        }

        environmental_selection(pop, weights, cfg.mu);
        ++gen;
        if (log) {
            log->record(gen, ev, pop.size(), n_leaders);
        }
    }

    std::vector<Solution> finals(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        finals[i] = {pop[i].x, pop[i].f, 0};
    }
    return moea::nondominated_filter(finals);
}

}  // namespace dengue::ddmoa2
