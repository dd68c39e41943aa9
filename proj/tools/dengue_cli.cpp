// Command-line front end: seeded optimization campaigns, random-mapping
// sampling, trajectory export for selected trade-off solutions, and
// evaluation of externally supplied controls.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dengue/harness/harness.hpp"
#include "dengue/io/csv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

std::vector<double> parse_target_list(const std::string& csv)
{
    std::vector<double> out;
    for (const auto& field : dengue::io::split_csv_line(csv)) {
        out.push_back(dengue::io::parse_double(field));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    using dengue::harness::ExperimentConfig;

    CLI::App app{"Dengue insecticide-control trade-off explorer"};
    app.require_subcommand(1);

    // campaign
    ExperimentConfig cfg;
    std::string config_file;
    std::string profile;
    std::string ref_point;
    auto* campaign = app.add_subcommand("campaign", "Run a seeded multi-run campaign");
    campaign->add_option("--config", config_file, "key = value config file");
    campaign->add_option("--algorithm", cfg.algorithm,
                         "one of: ddmoa2, nsga2, ibea, gde3, moead, smpso");
    campaign->add_option("--runs", cfg.runs, "number of independent runs");
    campaign->add_option("--seed", cfg.base_seed, "base seed; run k uses seed + k");
    campaign->add_option("--max-evals", cfg.max_evals, "evaluation budget per run");
    campaign->add_option("--pop-size", cfg.pop_size, "population size");
    campaign->add_option("--ref-point", ref_point, "hypervolume reference as f1,f2");
    campaign->add_option("--out", cfg.out_dir, "output directory");
    campaign->add_option("--profile", profile, "paper (30 x 1e5) or desk (5 x 2e4)");

    // sample
    std::size_t sample_count = 100000;
    std::uint64_t sample_seed = 1;
    std::string sample_out = "mapping.csv";
    auto* sample = app.add_subcommand(
        "sample", "Map uniform random decision vectors into objective space");
    sample->add_option("--count", sample_count, "number of samples");
    sample->add_option("--seed", sample_seed, "RNG seed");
    sample->add_option("--out", sample_out, "output CSV");

    // export-cases
    std::string front_path;
    std::string sidecar_path;
    std::string targets = "0,5,20,80";
    std::string cases_out = "cases";
    auto* cases = app.add_subcommand(
        "export-cases", "Re-simulate front solutions nearest to target f2 values");
    cases->add_option("--front", front_path, "front CSV (f1,f2)")->required();
    cases->add_option("--decisions", sidecar_path, "decision-vector sidecar CSV")->required();
    cases->add_option("--targets", targets, "comma-separated f2 targets");
    cases->add_option("--out", cases_out, "output directory");

    // eval-ref
    std::string control_path;
    dengue::sim::ScalarCostWeights weights;
    auto* evalref = app.add_subcommand(
        "eval-ref", "Evaluate an external control file (one value per line)");
    evalref->add_option("--control", control_path, "control file")->required();
    evalref->add_option("--gamma-d", weights.gamma_D, "cost weight of infected humans");
    evalref->add_option("--gamma-s", weights.gamma_S, "cost weight of spraying");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (campaign->parsed()) {
            if (!config_file.empty()) {
                dengue::harness::load_config_file(config_file, cfg);
            }
            if (!profile.empty()) {
                cfg.apply_profile(profile);
            }
            // explicit flags win over config file and profile
            for (const CLI::Option* opt : campaign->parse_order()) {
                if (opt->get_name() == "--runs") {
                    cfg.runs = opt->as<std::size_t>();
                } else if (opt->get_name() == "--max-evals") {
                    cfg.max_evals = opt->as<std::size_t>();
                } else if (opt->get_name() == "--algorithm") {
                    cfg.algorithm = opt->as<std::string>();
                } else if (opt->get_name() == "--seed") {
                    cfg.base_seed = opt->as<std::uint64_t>();
                } else if (opt->get_name() == "--pop-size") {
                    cfg.pop_size = opt->as<std::size_t>();
                } else if (opt->get_name() == "--out") {
                    cfg.out_dir = opt->as<std::string>();
                }
            }
            if (!ref_point.empty()) {
                const auto fields = dengue::io::split_csv_line(ref_point);
                if (fields.size() != 2) {
                    throw dengue::harness::ConfigError("--ref-point expects f1,f2");
                }
                cfg.ref = {dengue::io::parse_double(fields[0]),
                           dengue::io::parse_double(fields[1])};
            }
            const auto result = dengue::harness::run_campaign(cfg);
            std::cout << cfg.algorithm << ": " << cfg.runs << " runs, median hv "
                      << dengue::io::format_double(result.stats.median) << ", total hv "
                      << dengue::io::format_double(result.total_hv) << "\n";
        } else if (sample->parsed()) {
            dengue::harness::sample_random_mapping(sample_count, sample_seed, {}, sample_out);
            std::cout << "wrote " << sample_count << " samples to " << sample_out << "\n";
        } else if (cases->parsed()) {
            const auto written = dengue::harness::export_cases(
                front_path, sidecar_path, parse_target_list(targets), cases_out);
            for (const auto& p : written) {
                std::cout << p << "\n";
            }
        } else if (evalref->parsed()) {
            const auto r =
                dengue::harness::evaluate_reference_solution(control_path, weights);
            std::cout << "f1=" << dengue::io::format_double(r.f1)
                      << " f2=" << dengue::io::format_double(r.f2)
                      << " J=" << dengue::io::format_double(r.cost) << "\n";
        }
    } catch (const dengue::harness::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitOk;
}
