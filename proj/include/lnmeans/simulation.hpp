#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lnmeans/tests.hpp"

namespace lnmeans {

// Population parameters for one simulation cell: two log-normal
// populations sampled with sizes n1, n2.
struct Scenario {
    int n1 = 0;
    int n2 = 0;
    double mu1 = 0;
    double mu2 = 0;
    double sigma1_sq = 0;
    double sigma2_sq = 0;
};

// True under equal population means exp(mu + sigma_sq/2); such a cell
// measures size, any other cell measures power.
bool is_size_scenario(const Scenario& scenario);

struct ExperimentConfig {
    std::int64_t reps = 10000;   // outer replicates
    std::int64_t inner_m = 2000; // Monte Carlo replicates per test
    double alpha = 0.05;
    std::uint64_t seed = 0;
    std::vector<Method> methods = {Method::gpv, Method::km, Method::zscore};
    int threads = 0;             // 0 = all hardware threads
};

struct MethodOutcome {
    Method method = Method::gpv;
    std::int64_t rejections = 0;
    double rate = 0;      // rejections / reps
    double binom_se = 0;  // sqrt(rate * (1 - rate) / reps)
};

struct ExperimentResult {
    Scenario scenario;
    std::int64_t reps = 0;
    std::vector<MethodOutcome> outcomes;  // one per configured method
};

// Run one cell: per replicate, draw the two log-scale samples, summarize,
// run every configured method one-sided (H1: M1 > M2) on the same data,
// and count p <= alpha as a rejection.
//
// Replicate r's generator state derives from (config.seed, scenario_index,
// r) only, so results are bitwise-identical for any thread count.
ExperimentResult run_scenario(const Scenario& scenario,
                              const ExperimentConfig& config,
                              std::int64_t scenario_index = 0);

// Run a list of cells; results in input order. Scenario i keeps the
// deterministic stream layout of run_scenario(scenario, config, i).
std::vector<ExperimentResult> run_grid(std::span<const Scenario> scenarios,
                                       const ExperimentConfig& config);

}  // namespace lnmeans
