#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dengue/baselines/gde3.hpp"
#include "dengue/baselines/ibea.hpp"
#include "dengue/baselines/moead.hpp"
#include "dengue/baselines/nsga2.hpp"
#include "dengue/baselines/smpso.hpp"
#include "dengue/ddmoa2/ddmoa2.hpp"
#include "dengue/io/csv.hpp"
#include "dengue/metrics/hypervolume.hpp"
#include "dengue/moea/types.hpp"
#include "dengue/sim/simulate.hpp"

namespace dengue::harness {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& algorithm_names()
{
    static const std::vector<std::string> names{"ddmoa2", "nsga2", "ibea",
                                                "gde3",   "moead", "smpso"};
    return names;
}

struct ExperimentConfig {
    std::string algorithm = "ddmoa2";
    std::size_t runs = 30;
    std::uint64_t base_seed = 1;
    std::size_t pop_size = 100;
    std::size_t max_evals = 100000;
    moea::ObjectiveVector ref{3.0, 80.0};
    std::string out_dir = "out";
    sim::ModelParameters params;
    double horizon = sim::kDefaultHorizonDays;
    std::size_t steps = sim::kDefaultSteps;

    void apply_profile(const std::string& profile)
    {
        if (profile == "paper") {
            runs = 30;
            max_evals = 100000;
        } else if (profile == "desk") {
            runs = 5;
            max_evals = 20000;
        } else {
            throw ConfigError("unknown profile: " + profile);
        }
    }

    void validate() const
    {
        if (runs < 1) {
            throw ConfigError("runs must be >= 1");
        }
        const auto& names = algorithm_names();
        if (std::find(names.begin(), names.end(), algorithm) == names.end()) {
            throw ConfigError("unknown algorithm: " + algorithm);
        }
        if (!params.valid()) {
            throw ConfigError("model parameters must be strictly positive");
        }
    }
};

/// Line-oriented `key = value` config file; '#' starts a comment. Model
/// parameters are overridden via keys like `model.B`.
inline void load_config_file(const std::string& path, ExperimentConfig& cfg)
{
    std::ifstream f(path);
    if (!f) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::string line;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::map<std::string, double sim::ModelParameters::*> model_keys{
        {"model.N_h", &sim::ModelParameters::N_h},
        {"model.B", &sim::ModelParameters::B},
        {"model.beta_mh", &sim::ModelParameters::beta_mh},
        {"model.beta_hm", &sim::ModelParameters::beta_hm},
        {"model.mu_h", &sim::ModelParameters::mu_h},
        {"model.eta_h", &sim::ModelParameters::eta_h},
        {"model.mu_m", &sim::ModelParameters::mu_m},
        {"model.phi", &sim::ModelParameters::phi},
        {"model.mu_A", &sim::ModelParameters::mu_A},
        {"model.eta_A", &sim::ModelParameters::eta_A},
        {"model.eta_m", &sim::ModelParameters::eta_m},
        {"model.nu_h", &sim::ModelParameters::nu_h},
        {"model.m", &sim::ModelParameters::m},
        {"model.k", &sim::ModelParameters::k}};
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("malformed config line: " + line);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "algorithm") {
                cfg.algorithm = value;
            } else if (key == "runs") {
                cfg.runs = std::stoul(value);
            } else if (key == "seed") {
                cfg.base_seed = std::stoull(value);
            } else if (key == "pop_size") {
                cfg.pop_size = std::stoul(value);
            } else if (key == "max_evals") {
                cfg.max_evals = std::stoul(value);
            } else if (key == "ref_f1") {
                cfg.ref[0] = io::parse_double(value);
            } else if (key == "ref_f2") {
                cfg.ref[1] = io::parse_double(value);
            } else if (key == "out") {
                cfg.out_dir = value;
            } else if (key == "profile") {
                cfg.apply_profile(value);
            } else if (auto it = model_keys.find(key); it != model_keys.end()) {
                cfg.params.*(it->second) = io::parse_double(value);
            } else {
                throw ConfigError("unknown config key: " + key);
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad value for " + key + ": " + value);
        }
    }
}

inline moea::Problem make_dengue_problem(const sim::ModelParameters& params,
                                         double horizon = sim::kDefaultHorizonDays,
                                         std::size_t steps = sim::kDefaultSteps)
{
    moea::Problem p;
    p.dim = steps + 1;
    p.objective = [params, horizon, steps](std::span<const double> x) {
        const auto obj =
            sim::evaluate_objectives(sim::ControlSignal(x), params, horizon, steps);
        return moea::ObjectiveVector{obj.f1, obj.f2};
    };
    return p;
}

/// Dispatches one run of the configured algorithm with shared population
/// size and evaluation budget.
inline std::vector<moea::Solution> run_algorithm(const std::string& name,
                                                 const moea::Problem& problem,
                                                 std::size_t pop_size, std::size_t max_evals,
                                                 moea::Rng& rng,
                                                 moea::GenerationLog* log = nullptr)
{
    if (name == "ddmoa2") {
        ddmoa2::DdmoaConfig cfg;
        cfg.mu = pop_size;
        cfg.max_evals = max_evals;
        return ddmoa2::run(problem, cfg, rng, log);
    }
    if (name == "nsga2") {
        baselines::Nsga2Config cfg;
        cfg.pop_size = pop_size;
        cfg.max_evals = max_evals;
        return baselines::nsga2_run(problem, cfg, rng, log);
    }
    if (name == "ibea") {
        baselines::IbeaConfig cfg;
        cfg.pop_size = pop_size;
        cfg.max_evals = max_evals;
        return baselines::ibea_run(problem, cfg, rng, log);
    }
    if (name == "gde3") {
        baselines::Gde3Config cfg;
        cfg.pop_size = pop_size;
        cfg.max_evals = max_evals;
        return baselines::gde3_run(problem, cfg, rng, log);
    }
    if (name == "moead") {
        baselines::MoeadConfig cfg;
        cfg.pop_size = pop_size;
        cfg.max_evals = max_evals;
        return baselines::moead_run(problem, cfg, rng, log);
    }
    if (name == "smpso") {
        baselines::SmpsoConfig cfg;
        cfg.swarm_size = pop_size;
        cfg.archive_size = pop_size;
        cfg.max_evals = max_evals;
        return baselines::smpso_run(problem, cfg, rng, log);
    }
    throw ConfigError("unknown algorithm: " + name);
}

struct CampaignResult {
    std::vector<std::vector<moea::Solution>> fronts;  // one per run
    metrics::RunStatistics stats;
    double total_hv = 0.0;
};

/// Seeded multi-run campaign: run k uses seed base_seed + k. Writes one
/// front CSV (+ decision sidecar + generation log) per run plus an
/// aggregated statistics CSV. Byte-deterministic for a fixed config.
inline CampaignResult run_campaign(const ExperimentConfig& cfg)
{
    cfg.validate();
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory: " + cfg.out_dir);
    }

    const auto problem = make_dengue_problem(cfg.params, cfg.horizon, cfg.steps);

    CampaignResult result;
    std::vector<double> hv_per_run;
    for (std::size_t k = 0; k < cfg.runs; ++k) {
        moea::Rng rng(cfg.base_seed + k);
        moea::GenerationLog log;
        log.ref = cfg.ref;
        auto front = run_algorithm(cfg.algorithm, problem, cfg.pop_size, cfg.max_evals,
                                   rng, &log);

        const std::string stem =
            cfg.out_dir + "/" + cfg.algorithm + "_run" + std::to_string(k);
        io::write_front_csv(stem + "_front.csv", stem + "_x.csv", front);
        io::write_generation_log_csv(stem + "_log.csv", log);

        std::vector<moea::ObjectiveVector> fs_only(front.size());
        for (std::size_t i = 0; i < front.size(); ++i) {
            fs_only[i] = front[i].f;
        }
        hv_per_run.push_back(metrics::hypervolume_2d(fs_only, cfg.ref));
        result.fronts.push_back(std::move(front));
    }

    result.stats = metrics::aggregate_runs(hv_per_run);
    std::vector<std::vector<moea::ObjectiveVector>> all_fs;
    for (const auto& front : result.fronts) {
        std::vector<moea::ObjectiveVector> fs_only(front.size());
        for (std::size_t i = 0; i < front.size(); ++i) {
            fs_only[i] = front[i].f;
        }
        all_fs.push_back(std::move(fs_only));
    }
    result.total_hv = metrics::total_hypervolume(all_fs, cfg.ref);

    auto sf = io::open_for_write(cfg.out_dir + "/" + cfg.algorithm + "_stats.csv");
    sf << "algorithm,runs,median_hv,q1,q3,min,max,total_hv\n";
    sf << cfg.algorithm << ',' << cfg.runs << ',' << io::format_double(result.stats.median)
       << ',' << io::format_double(result.stats.q1) << ','
       << io::format_double(result.stats.q3) << ',' << io::format_double(result.stats.min)
       << ',' << io::format_double(result.stats.max) << ','
       << io::format_double(result.total_hv) << '\n';
    return result;
}

/// Uniform i.i.d. sampling of the decision hypercube mapped through the
/// model; writes `f1,f2` rows.
inline std::vector<moea::ObjectiveVector> sample_random_mapping(
    std::size_t count, std::uint64_t seed, const sim::ModelParameters& params,
    const std::string& out_path = {})
{
    if (count < 1) {
        throw ConfigError("sample count must be >= 1");
    }
    const auto problem = make_dengue_problem(params);
    moea::Rng rng(seed);
    std::vector<moea::ObjectiveVector> out;
    out.reserve(count);
    std::vector<double> x(problem.dim);
    for (std::size_t k = 0; k < count; ++k) {
        for (double& v : x) {
            v = moea::unit_uniform(rng);
        }
        out.push_back(problem.objective(x));
    }
    if (!out_path.empty()) {
        auto f = io::open_for_write(out_path);
        f << "f1,f2\n";
        for (const auto& p : out) {
            f << io::format_double(p[0]) << ',' << io::format_double(p[1]) << '\n';
        }
    }
    return out;
}

/// For each target f2, picks the front solution with the nearest f2,
/// re-simulates it, and writes its trajectory CSV into out_dir.
inline std::vector<std::string> export_cases(const std::string& front_path,
                                             const std::string& sidecar_path,
                                             const std::vector<double>& f2_targets,
                                             const std::string& out_dir,
                                             const sim::ModelParameters& params = {})
{
    const auto front = io::read_front_csv(front_path, sidecar_path);
    if (front.empty()) {
        throw std::runtime_error("front file is empty: " + front_path);
    }
    if (front[0].x.empty()) {
        throw std::runtime_error("missing decision sidecar for: " + front_path);
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);

    std::vector<std::string> written;
    for (std::size_t t = 0; t < f2_targets.size(); ++t) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < front.size(); ++i) {
            if (std::abs(front[i].f[1] - f2_targets[t]) <
                std::abs(front[best].f[1] - f2_targets[t])) {
                best = i;
            }
        }
        const sim::ControlSignal control(front[best].x);
        const auto traj = sim::integrate_rk4(params, control, sim::kDefaultHorizonDays,
                                             control.values.size() - 1);
        const std::string path = out_dir + "/case_" + std::to_string(t) + ".csv";
        auto f = io::open_for_write(path);
        io::write_trajectory_csv(f, traj, control);
        written.push_back(path);
    }
    return written;
}

struct ReferenceEvaluation {
    double f1;
    double f2;
    double cost;
};

/// Evaluates an externally supplied control (one value per line, steps + 1
/// lines) through the model: objectives plus the quadratic cost functional.
inline ReferenceEvaluation evaluate_reference_solution(
    const std::string& control_path, const sim::ScalarCostWeights& weights = {},
    const sim::ModelParameters& params = {}, double horizon = sim::kDefaultHorizonDays,
    std::size_t steps = sim::kDefaultSteps)
{
    std::ifstream f(control_path);
    if (!f) {
        throw std::runtime_error("cannot open control file: " + control_path);
    }
    sim::ControlSignal control;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) {
            continue;
        }
        control.values.push_back(io::parse_double(line));
    }
    if (control.values.size() != steps + 1) {
        throw ConfigError("control file must have " + std::to_string(steps + 1) +
                          " values, got " + std::to_string(control.values.size()));
    }
    if (!control.in_bounds()) {
        throw ConfigError("control values must lie in [0, 1]");
    }
    const auto obj = sim::evaluate_objectives(control, params, horizon, steps);
    const double cost = sim::scalar_cost(control, weights, params, horizon, steps);
    return {obj.f1, obj.f2, cost};
}

}  // namespace dengue::harness
