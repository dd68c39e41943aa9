#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dengue/harness/harness.hpp"
#include "dengue/io/csv.hpp"

using namespace dengue;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() /
               ("dengue_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter()
    {
        static int c = 0;
        return c;
    }
    std::string str(const std::string& name = {}) const
    {
        return name.empty() ? path.string() : (path / name).string();
    }
};

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    f << content;
}

}  // namespace

TEST_CASE("double formatting round-trips exactly")
{
    moea::Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const double v = (moea::unit_uniform(rng) - 0.5) *
                         std::pow(10.0, moea::unit_uniform(rng) * 20.0 - 10.0);
        CHECK(io::parse_double(io::format_double(v)) == v);
    }
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(84.0) == "84");
    CHECK(io::parse_double("  3.5") == 3.5);
    CHECK_THROWS(io::parse_double("abc"));
}

TEST_CASE("front CSV round-trips with its decision sidecar")
{
    TempDir dir;
    std::vector<moea::Solution> front;
    moea::Rng rng(8);
    for (int i = 0; i < 5; ++i) {
        moea::Solution s;
        s.x = {moea::unit_uniform(rng), moea::unit_uniform(rng)};
        s.f = {moea::unit_uniform(rng), moea::unit_uniform(rng)};
        front.push_back(std::move(s));
    }
    io::write_front_csv(dir.str("f.csv"), dir.str("x.csv"), front);
    const auto back = io::read_front_csv(dir.str("f.csv"), dir.str("x.csv"));
    REQUIRE(back.size() == front.size());
    for (std::size_t i = 1; i < back.size(); ++i) {
        CHECK(back[i - 1].f <= back[i].f);  // written in ascending f order
    }
    for (const auto& s : back) {
        bool found = false;
        for (const auto& o : front) {
            found = found || (o.f == s.f && o.x == s.x);
        }
        CHECK(found);
    }
    CHECK(slurp(dir.str("f.csv")).starts_with("f1,f2\n"));
    CHECK(slurp(dir.str("x.csv")).starts_with("x_0,x_1\n"));
}

TEST_CASE("profiles and validation")
{
    harness::ExperimentConfig cfg;
    cfg.apply_profile("desk");
    CHECK(cfg.runs == 5);
    CHECK(cfg.max_evals == 20000);
    cfg.apply_profile("paper");
    CHECK(cfg.runs == 30);
    CHECK(cfg.max_evals == 100000);
    CHECK_THROWS_AS(cfg.apply_profile("nope"), harness::ConfigError);

    cfg.validate();
    cfg.algorithm = "annealing";
    CHECK_THROWS_AS(cfg.validate(), harness::ConfigError);
    cfg.algorithm = "nsga2";
    cfg.runs = 0;
    CHECK_THROWS_AS(cfg.validate(), harness::ConfigError);
    cfg.runs = 1;
    cfg.params.B = 0.0;
    CHECK_THROWS_AS(cfg.validate(), harness::ConfigError);
}

TEST_CASE("config files parse keys, comments, and model overrides")
{
    TempDir dir;
    write_file(dir.str("good.cfg"),
               "# campaign setup\n"
               "algorithm = gde3\n"
               "runs = 3   # trailing comment\n"
               "seed = 99\n"
               "pop_size = 40\n"
               "max_evals = 1234\n"
               "ref_f1 = 2.5\n"
               "ref_f2 = 70\n"
               "out = results\n"
               "model.B = 0.9\n"
               "model.m = 5\n"
               "\n");
    harness::ExperimentConfig cfg;
    harness::load_config_file(dir.str("good.cfg"), cfg);
    CHECK(cfg.algorithm == "gde3");
    CHECK(cfg.runs == 3);
    CHECK(cfg.base_seed == 99);
    CHECK(cfg.pop_size == 40);
    CHECK(cfg.max_evals == 1234);
    CHECK(cfg.ref[0] == 2.5);
    CHECK(cfg.ref[1] == 70.0);
    CHECK(cfg.out_dir == "results");
    CHECK(cfg.params.B == 0.9);
    CHECK(cfg.params.m == 5.0);

    write_file(dir.str("badkey.cfg"), "colour = blue\n");
    CHECK_THROWS_AS(harness::load_config_file(dir.str("badkey.cfg"), cfg),
                    harness::ConfigError);
    write_file(dir.str("badline.cfg"), "just some words\n");
    CHECK_THROWS_AS(harness::load_config_file(dir.str("badline.cfg"), cfg),
                    harness::ConfigError);
    write_file(dir.str("badval.cfg"), "runs = many\n");
    CHECK_THROWS_AS(harness::load_config_file(dir.str("badval.cfg"), cfg),
                    harness::ConfigError);
    CHECK_THROWS_AS(harness::load_config_file(dir.str("missing.cfg"), cfg),
                    harness::ConfigError);
}

TEST_CASE("the dengue problem wraps the simulator one-to-one")
{
    const sim::ModelParameters params;
    const auto problem = harness::make_dengue_problem(params);
    CHECK(problem.dim == 1001);
    const std::vector<double> ones(1001, 1.0);
    const auto f = problem.objective(ones);
    const auto direct = sim::evaluate_objectives(sim::ControlSignal::constant(1.0), params);
    CHECK(f[0] == direct.f1);
    CHECK(f[1] == direct.f2);
    CHECK(f[1] == 84.0);

    const auto small = harness::make_dengue_problem(params, 84.0, 50);
    CHECK(small.dim == 51);
}

TEST_CASE("run_algorithm dispatches every name and rejects unknown ones")
{
    const auto problem = harness::make_dengue_problem({}, 84.0, 20);
    for (const auto& name : harness::algorithm_names()) {
        moea::Rng rng(3);
        const auto front = harness::run_algorithm(name, problem, 8, 60, rng);
        CHECK(!front.empty());
        for (const auto& s : front) {
            CHECK(s.f[1] >= 0.0);
            CHECK(s.f[1] <= 84.0);
        }
    }
    moea::Rng rng(3);
    CHECK_THROWS_AS(harness::run_algorithm("simplex", problem, 8, 60, rng),
                    harness::ConfigError);
}

TEST_CASE("campaigns are byte-identical when repeated")
{
    TempDir a;
    TempDir b;
    harness::ExperimentConfig cfg;
    cfg.algorithm = "ddmoa2";
    cfg.runs = 2;
    cfg.base_seed = 11;
    cfg.pop_size = 8;
    cfg.max_evals = 250;
    cfg.steps = 40;

    cfg.out_dir = a.str();
    const auto ra = harness::run_campaign(cfg);
    cfg.out_dir = b.str();
    const auto rb = harness::run_campaign(cfg);

    CHECK(ra.stats.median == rb.stats.median);
    CHECK(ra.total_hv == rb.total_hv);
    for (const auto& name :
         {std::string("ddmoa2_run0_front.csv"), std::string("ddmoa2_run0_x.csv"),
          std::string("ddmoa2_run0_log.csv"), std::string("ddmoa2_run1_front.csv"),
          std::string("ddmoa2_run1_x.csv"), std::string("ddmoa2_run1_log.csv"),
          std::string("ddmoa2_stats.csv")}) {
        CAPTURE(name);
        const std::string ca = slurp((a.path / name).string());
        CHECK(ca == slurp((b.path / name).string()));
        CHECK(!ca.empty());
    }
    CHECK(slurp(a.str("ddmoa2_stats.csv"))
              .starts_with("algorithm,runs,median_hv,q1,q3,min,max,total_hv\n"));
    CHECK(slurp(a.str("ddmoa2_run0_log.csv"))
              .starts_with("gen,funEval,pop_size,n_leaders,hv\n"));
    CHECK(ra.stats.median >= ra.stats.q1);
    CHECK(ra.stats.q3 >= ra.stats.median);
    CHECK(ra.total_hv >= ra.stats.max - 1e-12);
}

TEST_CASE("different base seeds change campaign outputs")
{
    TempDir a;
    TempDir b;
    harness::ExperimentConfig cfg;
    cfg.algorithm = "nsga2";
    cfg.runs = 1;
    cfg.pop_size = 8;
    cfg.max_evals = 150;
    cfg.steps = 40;

    cfg.base_seed = 1;
    cfg.out_dir = a.str();
    harness::run_campaign(cfg);
    cfg.base_seed = 2;
    cfg.out_dir = b.str();
    harness::run_campaign(cfg);
    CHECK(slurp(a.str("nsga2_run0_front.csv")) != slurp(b.str("nsga2_run0_front.csv")));
}

TEST_CASE("random mapping samples the control hypercube through the model")
{
    TempDir dir;
    const std::size_t count = 60;
    const auto pts =
        harness::sample_random_mapping(count, 7, {}, dir.str("map.csv"));
    REQUIRE(pts.size() == count);
    double mean_f2 = 0.0;
    for (const auto& p : pts) {
        CHECK(p[0] > 0.0);
        CHECK(p[0] < 2.769312774);  // uncontrolled epidemic bounds f1 above
        CHECK(p[1] >= 0.0);
        CHECK(p[1] <= 84.0);
        mean_f2 += p[1];
    }
    mean_f2 /= static_cast<double>(count);
    // mean control level 0.5 integrates to 42; allow four standard errors
    const double se = 84.0 / std::sqrt(12.0) / std::sqrt(static_cast<double>(count));
    CHECK(std::abs(mean_f2 - 42.0) <= 4.0 * se);

    const auto body = slurp(dir.str("map.csv"));
    CHECK(body.starts_with("f1,f2\n"));
    CHECK(std::count(body.begin(), body.end(), '\n') == count + 1);
    CHECK_THROWS_AS(harness::sample_random_mapping(0, 7, {}, {}), harness::ConfigError);
}

TEST_CASE("case export picks nearest-f2 solutions and re-simulates them")
{
    TempDir dir;
    // build a tiny front from two constant controls on a 50-step grid
    const sim::ModelParameters params;
    std::vector<moea::Solution> front;
    for (double level : {0.0, 1.0}) {
        moea::Solution s;
        s.x.assign(51, level);
        const auto obj =
            sim::evaluate_objectives(sim::ControlSignal::constant(level, 51), params, 84.0, 50);
        s.f = {obj.f1, obj.f2};
        front.push_back(std::move(s));
    }
    io::write_front_csv(dir.str("front.csv"), dir.str("x.csv"), front);

    const auto written = harness::export_cases(dir.str("front.csv"), dir.str("x.csv"),
                                               {1.0, 80.0}, dir.str("cases"));
    REQUIRE(written.size() == 2);

    for (std::size_t t = 0; t < 2; ++t) {
        const auto body = slurp(written[t]);
        CHECK(body.starts_with("t,s_h,e_h,i_h,r_h,a_m,s_m,e_m,i_m,c\n"));
        CHECK(std::count(body.begin(), body.end(), '\n') == 52);
    }
    // target 1 is nearest the all-off control, target 80 the all-on control
    std::string last0 = slurp(written[0]);
    last0 = last0.substr(last0.rfind(',') + 1);
    CHECK(io::parse_double(last0) == 0.0);
    std::string last1 = slurp(written[1]);
    last1 = last1.substr(last1.rfind(',') + 1);
    CHECK(io::parse_double(last1) == 1.0);

    // the re-simulated trajectory matches a direct integration bitwise
    const auto traj = sim::integrate_rk4(params, sim::ControlSignal::constant(1.0, 51),
                                         84.0, 50);
    std::stringstream expect;
    io::write_trajectory_csv(expect, traj, sim::ControlSignal::constant(1.0, 51));
    CHECK(slurp(written[1]) == expect.str());

    CHECK_THROWS(harness::export_cases(dir.str("absent.csv"), dir.str("x.csv"), {1.0},
                                       dir.str("cases")));
}

TEST_CASE("reference-control evaluation reproduces the frozen objective values")
{
    TempDir dir;
    std::string zeros;
    std::string ones;
    for (int i = 0; i < 1001; ++i) {
        zeros += "0\n";
        ones += "1\n";
    }
    write_file(dir.str("zeros.txt"), zeros);
    write_file(dir.str("ones.txt"), ones);

    const auto r0 = harness::evaluate_reference_solution(dir.str("zeros.txt"));
    CHECK(r0.f1 == doctest::Approx(2.769312774).epsilon(1e-6));
    CHECK(r0.f2 == 0.0);
    CHECK(r0.cost == doctest::Approx(0.156610856374).epsilon(1e-6));

    const auto r1 = harness::evaluate_reference_solution(dir.str("ones.txt"));
    CHECK(r1.f1 == doctest::Approx(0.0041995424).epsilon(1e-4));
    CHECK(r1.f2 == 84.0);

    write_file(dir.str("short.txt"), "0\n0\n0\n");
    CHECK_THROWS_AS(harness::evaluate_reference_solution(dir.str("short.txt")),
                    harness::ConfigError);
    write_file(dir.str("oob.txt"), zeros.substr(0, 2000) + "1.5\n");
    CHECK_THROWS_AS(harness::evaluate_reference_solution(dir.str("oob.txt")),
                    harness::ConfigError);
    CHECK_THROWS(harness::evaluate_reference_solution(dir.str("nothere.txt")));
}
