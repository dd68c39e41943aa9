#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <vector>

#include "dengue/moea/dominance.hpp"
#include "dengue/moea/rng.hpp"
#include "dengue/moea/scalarize.hpp"
#include "dengue/moea/types.hpp"
#include "dengue/moea/variation.hpp"
#include "support/problems.hpp"

using namespace dengue::moea;

namespace {

std::vector<ObjectiveVector> random_cloud(std::size_t n, Rng& rng)
{
    std::vector<ObjectiveVector> pts(n);
    for (auto& p : pts) {
        p = {unit_uniform(rng), unit_uniform(rng)};
    }
    return pts;
}

}  // namespace

TEST_CASE("dominance on hand-picked pairs")
{
    CHECK(dominates({1.0, 2.0}, {2.0, 3.0}));
    CHECK(dominates({1.0, 2.0}, {1.0, 3.0}));
    CHECK(!dominates({1.0, 2.0}, {1.0, 2.0}));
    CHECK(!dominates({1.0, 3.0}, {2.0, 2.0}));
    CHECK(!dominates({2.0, 3.0}, {1.0, 2.0}));

    CHECK(weakly_dominates({1.0, 2.0}, {1.0, 2.0}));
    CHECK(weakly_dominates({1.0, 2.0}, {1.0, 3.0}));
    CHECK(!weakly_dominates({1.0, 3.0}, {2.0, 2.0}));
}

TEST_CASE("dominance is irreflexive, asymmetric, and transitive on random clouds")
{
    Rng rng(7);
    const auto pts = random_cloud(40, rng);
    for (const auto& a : pts) {
        CHECK(!dominates(a, a));
        for (const auto& b : pts) {
            if (dominates(a, b)) {
                CHECK(!dominates(b, a));
                for (const auto& c : pts) {
                    if (dominates(b, c)) {
                        CHECK(dominates(a, c));
                    }
                }
            }
        }
    }
}

TEST_CASE("nondominated_indices agrees with the brute-force oracle")
{
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_cloud(60, rng);
        CHECK(nondominated_indices(pts) == testsupport::brute_force_nondominated(pts));
    }
}

TEST_CASE("objective-space duplicates survive the nondominated filter together")
{
    std::vector<ObjectiveVector> pts = {{1.0, 2.0}, {1.0, 2.0}, {0.5, 3.0}, {2.0, 2.0}};
    const auto keep = nondominated_indices(pts);
    CHECK(keep == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("fast nondominated sort agrees with the peeling oracle")
{
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pts = random_cloud(80, rng);
        CHECK(fast_nondominated_sort(pts) == testsupport::peeling_ranks(pts));
    }
}

TEST_CASE("crowding distance on a hand-worked front")
{
    // front sorted by f1: (0,1), (0.2, 0.6), (0.5, 0.5), (1, 0)
    std::vector<ObjectiveVector> front = {{0.0, 1.0}, {0.2, 0.6}, {0.5, 0.5}, {1.0, 0.0}};
    const auto d = crowding_distance(front);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(d[0] == inf);
    CHECK(d[3] == inf);
    // interior: ((0.5-0)/1 + (1-0.5)/1) and ((1-0.2)/1 + (0.6-0)/1)
    CHECK(d[1] == doctest::Approx(0.5 + 0.5));
    CHECK(d[2] == doctest::Approx(0.8 + 0.6));
}

TEST_CASE("crowding distance marks everything infinite for tiny fronts")
{
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(crowding_distance({{1.0, 2.0}})[0] == inf);
    const auto d2 = crowding_distance({{1.0, 2.0}, {2.0, 1.0}});
    CHECK(d2[0] == inf);
    CHECK(d2[1] == inf);
}

TEST_CASE("Pareto archive maintains a staircase and matches the brute-force front")
{
    Rng rng(17);
    Pareto2dArchive arch;
    std::vector<ObjectiveVector> all;
    for (int i = 0; i < 500; ++i) {
        const ObjectiveVector p = {unit_uniform(rng), unit_uniform(rng)};
        all.push_back(p);
        arch.insert(p);
    }
    std::set<std::pair<double, double>> oracle;
    for (std::size_t i : testsupport::brute_force_nondominated(all)) {
        oracle.emplace(all[i][0], all[i][1]);
    }
    std::set<std::pair<double, double>> got;
    for (const auto& p : arch.points()) {
        got.emplace(p[0], p[1]);
    }
    CHECK(got == oracle);
    // staircase order: f1 strictly ascending, f2 strictly descending
    const auto pts = arch.points();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        CHECK(pts[i][0] > pts[i - 1][0]);
        CHECK(pts[i][1] < pts[i - 1][1]);
    }
}

TEST_CASE("archive dominance queries and duplicate handling")
{
    Pareto2dArchive arch;
    arch.insert({1.0, 2.0});
    CHECK(arch.weakly_dominated({1.0, 2.0}));
    CHECK(arch.weakly_dominated({1.5, 2.5}));
    CHECK(!arch.weakly_dominated({0.5, 2.5}));
    arch.insert({1.0, 2.0});
    CHECK(arch.size() == 1);
    arch.insert({0.5, 3.0});
    arch.insert({0.2, 1.0});  // dominates both previous points
    CHECK(arch.size() == 1);
    CHECK(arch.points()[0] == ObjectiveVector{0.2, 1.0});
}

TEST_CASE("evaluator counts every call and tracks the union front")
{
    const auto problem = testsupport::bi_sphere();
    Evaluator ev(problem, 10);
    CHECK(ev.remaining() == 10);
    const std::vector<double> x = {0.25, 0.25};
    const auto f = ev.evaluate(x);
    CHECK(f[0] == doctest::Approx(0.0));
    CHECK(f[1] == doctest::Approx(0.5));
    CHECK(ev.used() == 1);
    for (int i = 0; i < 12; ++i) {
        ev.evaluate(x);
    }
    CHECK(ev.used() == 13);
    CHECK(ev.exhausted());
    CHECK(ev.remaining() == 0);
    CHECK(ev.union_front().size() == 1);
}

TEST_CASE("generation log hypervolume never decreases")
{
    const auto problem = testsupport::bi_sphere();
    Evaluator ev(problem, 200);
    GenerationLog log;
    log.ref = {2.0, 2.0};
    Rng rng(23);
    for (std::size_t gen = 0; gen < 20; ++gen) {
        for (int i = 0; i < 10; ++i) {
            const std::vector<double> x = {unit_uniform(rng), unit_uniform(rng)};
            ev.evaluate(x);
        }
        log.record(gen, ev, 10, 0);
    }
    for (std::size_t i = 1; i < log.rows.size(); ++i) {
        CHECK(log.rows[i].hv >= log.rows[i - 1].hv);
        CHECK(log.rows[i].fun_eval == (i + 1) * 10);
    }
}

TEST_CASE("weight vectors are evenly spaced and sum to one")
{
    const auto w = generate_weights(5);
    REQUIRE(w.size() == 5);
    CHECK(w[0][0] == 0.0);
    CHECK(w[0][1] == 1.0);
    CHECK(w[2][0] == doctest::Approx(0.5));
    CHECK(w[4][0] == 1.0);
    CHECK(w[4][1] == 0.0);
    for (const auto& wi : w) {
        CHECK(wi[0] + wi[1] == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(generate_weights(1), std::invalid_argument);
}

TEST_CASE("normalization maps extremes to 0 and 1 and zeros degenerate columns")
{
    std::vector<ObjectiveVector> fs = {{2.0, 7.0}, {4.0, 7.0}, {3.0, 7.0}};
    const auto n = normalize_objectives(fs);
    CHECK(n[0][0] == 0.0);
    CHECK(n[1][0] == 1.0);
    CHECK(n[2][0] == doctest::Approx(0.5));
    for (const auto& row : n) {
        CHECK(row[1] == 0.0);
    }
    CHECK_THROWS_AS(normalize_objectives({}), std::invalid_argument);
}

TEST_CASE("Chebyshev fitness is the weighted max")
{
    CHECK(chebyshev_fitness({0.4, 0.2}, {0.5, 0.5}) == doctest::Approx(0.2));
    CHECK(chebyshev_fitness({0.1, 0.9}, {0.5, 0.5}) == doctest::Approx(0.45));
    CHECK(chebyshev_fitness({0.3, 0.8}, {1.0, 0.0}) == doctest::Approx(0.3));
}

TEST_CASE("SBX spread factor at the median draw reproduces the parents")
{
    CHECK(sbx_beta(0.5, 20.0) == doctest::Approx(1.0));
    // symmetric tails: beta(u) * beta(1-u) == 1
    for (double u : {0.1, 0.25, 0.4}) {
        CHECK(sbx_beta(u, 20.0) * sbx_beta(1.0 - u, 20.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("SBX children average to the parents' midpoint and stay in the box")
{
    Rng rng(31);
    const std::vector<double> p1 = {0.1, 0.9, 0.5};
    const std::vector<double> p2 = {0.4, 0.2, 0.5};
    for (int trial = 0; trial < 200; ++trial) {
        const auto [c1, c2] = sbx_crossover(p1, p2, 20.0, 0.9, rng);
        for (std::size_t i = 0; i < p1.size(); ++i) {
            CHECK(c1[i] >= 0.0);
            CHECK(c1[i] <= 1.0);
            CHECK(c2[i] >= 0.0);
            CHECK(c2[i] <= 1.0);
            // midpoint preserved unless a child was clamped at the box
            if (c1[i] > 0.0 && c1[i] < 1.0 && c2[i] > 0.0 && c2[i] < 1.0) {
                CHECK(0.5 * (c1[i] + c2[i]) == doctest::Approx(0.5 * (p1[i] + p2[i])));
            }
        }
    }
}

TEST_CASE("polynomial mutation perturbation is zero at the median draw")
{
    CHECK(polymut_delta(0.5, 20.0) == doctest::Approx(0.0));
    CHECK(polymut_delta(0.0, 20.0) == doctest::Approx(-1.0));
    CHECK(polymut_delta(1.0, 20.0) == doctest::Approx(1.0));
    CHECK(polymut_delta(0.2, 20.0) == doctest::Approx(-polymut_delta(0.8, 20.0)));
}

TEST_CASE("polynomial mutation respects the box and p_m = 0 is the identity")
{
    Rng rng(37);
    const std::vector<double> x = {0.0, 1.0, 0.5};
    CHECK(polynomial_mutation(x, 20.0, 0.0, rng) == x);
    for (int trial = 0; trial < 200; ++trial) {
        const auto y = polynomial_mutation(x, 20.0, 1.0, rng);
        for (double v : y) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("DE trial inherits at least one mutant coordinate even at CR = 0")
{
    Rng rng(41);
    const std::vector<double> t = {0.5, 0.5, 0.5, 0.5};
    const std::vector<double> r1 = {0.1, 0.2, 0.3, 0.4};
    const std::vector<double> r2 = {0.0, 0.0, 0.0, 0.0};
    const std::vector<double> r3 = {0.0, 0.0, 0.0, 0.0};
    for (int trial = 0; trial < 100; ++trial) {
        const auto v = de_rand_1_bin(t, r1, r2, r3, 0.5, 0.0, rng);
        std::size_t changed = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (v[i] != t[i]) {
                ++changed;
                CHECK(v[i] == doctest::Approx(r1[i]));
            }
        }
        CHECK(changed == 1);
    }
}

TEST_CASE("DE trial equals the projected mutant at CR = 1")
{
    Rng rng(43);
    const std::vector<double> t = {0.5, 0.5};
    const std::vector<double> r1 = {0.9, 0.1};
    const std::vector<double> r2 = {0.8, 0.3};
    const std::vector<double> r3 = {0.2, 0.4};
    const auto v = de_rand_1_bin(t, r1, r2, r3, 0.5, 1.0, rng);
    CHECK(v[0] == doctest::Approx(std::min(1.0, 0.9 + 0.5 * (0.8 - 0.2))));
    CHECK(v[1] == doctest::Approx(std::max(0.0, 0.1 + 0.5 * (0.3 - 0.4))));
    CHECK_THROWS_AS(de_rand_1_bin(t, {0.1}, r2, r3, 0.5, 1.0, rng),
                    std::invalid_argument);
}

TEST_CASE("Latin hypercube fills every stratum exactly once per dimension")
{
    Rng rng(47);
    const std::size_t count = 32;
    const std::size_t dim = 5;
    const auto samples = latin_hypercube_init(count, dim, rng);
    REQUIRE(samples.size() == count);
    for (std::size_t d = 0; d < dim; ++d) {
        std::vector<bool> hit(count, false);
        for (std::size_t i = 0; i < count; ++i) {
            const double v = samples[i][d];
            CHECK(v >= 0.0);
            CHECK(v < 1.0);
            const auto s = static_cast<std::size_t>(v * static_cast<double>(count));
            CHECK(!hit[s]);
            hit[s] = true;
        }
    }
    CHECK_THROWS_AS(latin_hypercube_init(0, 3, rng), std::invalid_argument);
}

TEST_CASE("identically seeded generators reproduce the same draws")
{
    Rng a(123);
    Rng b(123);
    for (int i = 0; i < 100; ++i) {
        CHECK(unit_uniform(a) == unit_uniform(b));
    }
    CHECK(uniform_index(a, 10) == uniform_index(b, 10));
    CHECK(standard_normal(a) == standard_normal(b));
}
