#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "lnmeans/errors.hpp"
#include "lnmeans/simulation.hpp"

using namespace lnmeans;

namespace {

ExperimentConfig quick_config() {
    ExperimentConfig config;
    config.reps = 400;
    config.inner_m = 200;
    config.alpha = 0.05;
    config.seed = 2026;
    config.threads = 2;
    return config;
}

}  // namespace

TEST_CASE("is_size_scenario: computed from the equal-means condition") {
    CHECK(is_size_scenario(Scenario{25, 25, 0, 0, 1, 1}));
    CHECK(is_size_scenario(Scenario{4, 4, 1, 0, 2, 4}));
    CHECK(is_size_scenario(Scenario{10, 25, 5, 0, 2, 12}));
    CHECK_FALSE(is_size_scenario(Scenario{10, 10, 4, 0, 1, 1}));
    CHECK_FALSE(is_size_scenario(Scenario{25, 25, 0, 0, 4, 2}));
}

TEST_CASE("run_scenario: validates scenario and config") {
    const Scenario good{10, 10, 0, 0, 1, 1};
    ExperimentConfig config = quick_config();

    CHECK_THROWS_AS(run_scenario(Scenario{1, 10, 0, 0, 1, 1}, config), InvalidSettings);
    CHECK_THROWS_AS(run_scenario(Scenario{10, 10, 0, 0, 0, 1}, config), InvalidSettings);
    config.reps = 0;
    CHECK_THROWS_AS(run_scenario(good, config), InvalidSettings);
    config = quick_config();
    config.inner_m = 0;
    CHECK_THROWS_AS(run_scenario(good, config), InvalidSettings);
    config = quick_config();
    config.alpha = 0.0;
    CHECK_THROWS_AS(run_scenario(good, config), InvalidSettings);
    config.alpha = 1.0;
    CHECK_THROWS_AS(run_scenario(good, config), InvalidSettings);
}

TEST_CASE("run_scenario: result shape and bookkeeping") {
    const Scenario scenario{10, 10, 1, 0, 2, 4};
    const ExperimentConfig config = quick_config();
    const ExperimentResult result = run_scenario(scenario, config);

    REQUIRE(result.outcomes.size() == 3);
    CHECK(result.reps == config.reps);
    for (const auto& outcome : result.outcomes) {
        CHECK(outcome.rejections >= 0);
        CHECK(outcome.rejections <= config.reps);
        CHECK(outcome.rate ==
              static_cast<double>(outcome.rejections) / static_cast<double>(config.reps));
        CHECK(outcome.binom_se ==
              doctest::Approx(std::sqrt(outcome.rate * (1.0 - outcome.rate) / config.reps))
                  .epsilon(1e-15));
    }
}

TEST_CASE("run_scenario: identical results for any thread count") {
    const Scenario scenario{10, 10, 0, 0, 3, 3};
    ExperimentConfig config = quick_config();

    config.threads = 1;
    const ExperimentResult one = run_scenario(scenario, config);
    config.threads = 3;
    const ExperimentResult three = run_scenario(scenario, config);
    config.threads = 8;
    const ExperimentResult eight = run_scenario(scenario, config);

    REQUIRE(one.outcomes.size() == three.outcomes.size());
    for (std::size_t k = 0; k < one.outcomes.size(); ++k) {
        CHECK(one.outcomes[k].rejections == three.outcomes[k].rejections);
        CHECK(one.outcomes[k].rejections == eight.outcomes[k].rejections);
        CHECK(one.outcomes[k].rate == three.outcomes[k].rate);
    }
}

TEST_CASE("run_scenario: method subsets see the same data") {
    const Scenario scenario{10, 10, 1, 0, 2, 4};
    ExperimentConfig config = quick_config();

    const ExperimentResult all = run_scenario(scenario, config);
    config.methods = {Method::zscore};
    const ExperimentResult only_z = run_scenario(scenario, config);
    config.methods = {Method::gpv};
    const ExperimentResult only_gpv = run_scenario(scenario, config);

    CHECK(only_z.outcomes[0].rejections == all.outcomes[2].rejections);
    CHECK(only_gpv.outcomes[0].rejections == all.outcomes[0].rejections);
}

TEST_CASE("run_scenario: seeds matter") {
    const Scenario scenario{10, 10, 0, 0, 3, 3};
    ExperimentConfig config = quick_config();
    config.reps = 2000;
    const ExperimentResult a = run_scenario(scenario, config);
    config.seed += 1;
    const ExperimentResult b = run_scenario(scenario, config);
    bool any_differ = false;
    for (std::size_t k = 0; k < a.outcomes.size(); ++k)
        any_differ |= (a.outcomes[k].rejections != b.outcomes[k].rejections);
    CHECK(any_differ);
}

TEST_CASE("run_scenario: size scenario rates sit near the nominal level") {
    const Scenario scenario{25, 25, 0, 0, 1, 1};
    ExperimentConfig config = quick_config();
    config.reps = 2000;
    config.inner_m = 500;
    const ExperimentResult result = run_scenario(scenario, config);
    // gpv and km near 0.05 (generous band: binomial SE at 2000 reps ~ 0.005)
    CHECK(result.outcomes[0].rate > 0.03);
    CHECK(result.outcomes[0].rate < 0.07);
    CHECK(result.outcomes[1].rate > 0.03);
    CHECK(result.outcomes[1].rate < 0.07);
}

TEST_CASE("run_scenario: power of gpv is nondecreasing in mu1") {
    // nominal replicate count, reduced inner loop; the power gaps across
    // mu1 in {0, 0.5, 1, 2} dwarf 2 binomial standard errors
    ExperimentConfig config;
    config.reps = 10000;
    config.inner_m = 400;
    config.seed = 7;
    config.methods = {Method::gpv};
    config.threads = 0;

    double previous = -1.0;
    double previous_se = 0.0;
    for (const double mu1 : {0.0, 0.5, 1.0, 2.0}) {
        const Scenario scenario{10, 10, mu1, 0, 1, 1};
        const ExperimentResult result = run_scenario(scenario, config);
        const auto& outcome = result.outcomes[0];
        CHECK(outcome.rate >= previous - 2.0 * (previous_se + outcome.binom_se));
        previous = outcome.rate;
        previous_se = outcome.binom_se;
    }
    CHECK(previous > 0.8);  // power at mu1 = 2, sigma^2 = 1, n = 10 is ~0.86
}

TEST_CASE("run_grid: composition and ordering") {
    const ExperimentConfig config = quick_config();
    CHECK(run_grid({}, config).empty());

    const std::vector<Scenario> scenarios{{10, 10, 0, 0, 3, 3}, {10, 10, 1, 0, 2, 4}};
    const auto results = run_grid(scenarios, config);
    REQUIRE(results.size() == 2);
    CHECK(results[0].scenario.sigma1_sq == 3.0);
    CHECK(results[1].scenario.sigma1_sq == 2.0);

    // singleton grid equals a direct run at scenario_index 0
    const auto single = run_grid({scenarios.data(), 1}, config);
    const auto direct = run_scenario(scenarios[0], config, 0);
    for (std::size_t k = 0; k < direct.outcomes.size(); ++k)
        CHECK(single[0].outcomes[k].rejections == direct.outcomes[k].rejections);

    // scenario 1 in a grid keeps its own stream family
    const auto direct1 = run_scenario(scenarios[1], config, 1);
    for (std::size_t k = 0; k < direct1.outcomes.size(); ++k)
        CHECK(results[1].outcomes[k].rejections == direct1.outcomes[k].rejections);
}

TEST_CASE("run_grid: errors carry the scenario index") {
    const std::vector<Scenario> scenarios{{10, 10, 0, 0, 1, 1}, {10, 10, 0, 0, -1, 1}};
    try {
        run_grid(scenarios, quick_config());
        FAIL("expected an error for the invalid scenario");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("scenario 1") != std::string::npos);
    }
}
