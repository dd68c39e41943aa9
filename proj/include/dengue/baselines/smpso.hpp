#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "dengue/moea/dominance.hpp"
#include "dengue/moea/rng.hpp"
#include "dengue/moea/types.hpp"
#include "dengue/moea/variation.hpp"

namespace dengue::baselines {

struct SmpsoConfig {
    std::size_t swarm_size = 100;
    std::size_t archive_size = 100;
    double c_min = 1.5;  // lower end of the c1, c2 draw
    double c_max = 2.5;
    double inertia = 0.1;
    double eta_m = 20.0;
    std::size_t max_evals = 100000;
};

namespace detail {

/// Constriction factor from rho = c1 + c2; identity below the rho = 4
/// threshold.
inline double constriction_factor(double c1, double c2)
{
    const double rho = c1 + c2;
    if (rho <= 4.0) {
        return 1.0;
    }
    return 2.0 / std::abs(2.0 - rho - std::sqrt(rho * rho - 4.0 * rho));
}

/// Per-component velocity bound: half the variable range of the unit box.
inline double clamp_velocity(double v)
{
    return std::clamp(v, -0.5, 0.5);
}

/// Crowding-pruned bounded archive of nondominated particles.
class LeaderArchive {
public:
    explicit LeaderArchive(std::size_t cap) : cap_(cap) {}

    void add(const moea::Solution& s)
    {
        for (const auto& m : members_) {
            if (moea::weakly_dominates(m.f, s.f)) {
                return;
            }
        }
        std::erase_if(members_, [&](const moea::Solution& m) {
            return moea::dominates(s.f, m.f);
        });
        members_.push_back(s);
        if (members_.size() > cap_) {
            const auto cd = crowding();
            const std::size_t worst = static_cast<std::size_t>(
                std::min_element(cd.begin(), cd.end()) - cd.begin());
            members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(worst));
        }
    }

    const moea::Solution& tournament_leader(moea::Rng& rng) const
    {
        const auto cd = crowding();
        const std::size_t a = moea::uniform_index(rng, members_.size());
        const std::size_t b = moea::uniform_index(rng, members_.size());
        return members_[cd[a] >= cd[b] ? a : b];  // less crowded wins
    }

    const std::vector<moea::Solution>& members() const { return members_; }
    bool empty() const { return members_.empty(); }

private:
    std::vector<double> crowding() const
    {
        std::vector<moea::ObjectiveVector> fs(members_.size());
        for (std::size_t i = 0; i < members_.size(); ++i) {
            fs[i] = members_[i].f;
        }
        return moea::crowding_distance(fs);
    }

    std::size_t cap_;
    std::vector<moea::Solution> members_;
};

}  // namespace detail

inline std::vector<moea::Solution> smpso_run(const moea::Problem& problem,
                                             const SmpsoConfig& cfg, moea::Rng& rng,
                                             moea::GenerationLog* log = nullptr)
{
    moea::Evaluator ev(problem, cfg.max_evals);
    const std::size_t n = problem.dim;
    const double p_m = 1.0 / static_cast<double>(n);

    std::vector<moea::Solution> swarm;
    for (auto& x : moea::latin_hypercube_init(cfg.swarm_size, n, rng)) {
        moea::Solution s;
        s.f = ev.evaluate(x);
        s.x = std::move(x);
        swarm.push_back(std::move(s));
    }
    std::vector<moea::Solution> pbest = swarm;
    std::vector<std::vector<double>> velocity(cfg.swarm_size, std::vector<double>(n, 0.0));

    detail::LeaderArchive archive(cfg.archive_size);
    for (const auto& s : swarm) {
        archive.add(s);
    }

    std::size_t gen = 0;
    while (!ev.exhausted()) {
        for (std::size_t i = 0; i < cfg.swarm_size && !ev.exhausted(); ++i) {
            const moea::Solution& leader = archive.tournament_leader(rng);
            const double r1 = moea::unit_uniform(rng);
            const double r2 = moea::unit_uniform(rng);
            const double c1 =
                cfg.c_min + (cfg.c_max - cfg.c_min) * moea::unit_uniform(rng);
            const double c2 =
                cfg.c_min + (cfg.c_max - cfg.c_min) * moea::unit_uniform(rng);
            const double chi = detail::constriction_factor(c1, c2);

            auto& v = velocity[i];
            auto& x = swarm[i].x;
            for (std::size_t d = 0; d < n; ++d) {
                const double raw = cfg.inertia * v[d] + c1 * r1 * (pbest[i].x[d] - x[d]) +
                                   c2 * r2 * (leader.x[d] - x[d]);
                v[d] = detail::clamp_velocity(chi * raw);
                x[d] += v[d];
                if (x[d] < 0.0 || x[d] > 1.0) {
                    x[d] = moea::clamp01(x[d]);
                    v[d] = -v[d];
                }
            }
            if (i % 6 == 0) {
                x = moea::polynomial_mutation(x, cfg.eta_m, p_m, rng);
            }
            swarm[i].f = ev.evaluate(x);
            if (!moea::dominates(pbest[i].f, swarm[i].f)) {
                pbest[i] = swarm[i];
            }
            archive.add(swarm[i]);
        }
        ++gen;
        if (log) {
            log->record(gen, ev, archive.members().size(), 0);
        }
    }
    return moea::nondominated_filter(archive.members());
}

}  // namespace dengue::baselines
