#include "lnmeans/simulation.hpp"

#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "lnmeans/distributions.hpp"
#include "lnmeans/errors.hpp"
#include "lnmeans/rng.hpp"

namespace lnmeans {

bool is_size_scenario(const Scenario& scenario) {
    return scenario.mu1 + 0.5 * scenario.sigma1_sq ==
           scenario.mu2 + 0.5 * scenario.sigma2_sq;
}

namespace {

// Salts separating the derived stream families: replicate data versus the
// inner Monte Carlo runs of each sampling method.
constexpr std::uint64_t kDataSalt = 0x64617461;   // "data"
constexpr std::uint64_t kInnerGpvSalt = 0x677076; // "gpv"
constexpr std::uint64_t kInnerKmSalt = 0x6b6d;    // "km"

void validate(const Scenario& scenario) {
    if (scenario.n1 < 2 || scenario.n2 < 2)
        throw InvalidSettings("scenario: sample sizes must be >= 2");
    if (!(scenario.sigma1_sq > 0.0) || !(scenario.sigma2_sq > 0.0))
        throw InvalidSettings("scenario: variances must be strictly positive");
}

void validate(const ExperimentConfig& config) {
    if (config.reps < 1)
        throw InvalidSettings("config: reps must be >= 1");
    if (config.inner_m < 1)
        throw InvalidSettings("config: inner_m must be >= 1");
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        throw InvalidSettings("config: alpha must lie in (0, 1)");
}

LogSummary summarize_normal_draws(int n, double mu, double sigma, RngStream& stream) {
    std::vector<double> values(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& v : values) {
        v = mu + sigma * std_normal_sample(stream);
        sum += v;
    }
    const double ybar = sum / n;
    double ss = 0.0;
    for (const double v : values) {
        const double d = v - ybar;
        ss += d * d;
    }
    return LogSummary{n, ybar, ss / n};
}

// One replicate: generate both samples, then run every configured method
// on the same data. Returns one reject/keep bit per method.
void run_replicate(const Scenario& scenario, const ExperimentConfig& config,
                   std::int64_t scenario_index, std::int64_t replicate,
                   std::vector<std::int64_t>& rejections) {
    const std::uint64_t replicate_key =
        hash_combine(hash_combine(kDataSalt, static_cast<std::uint64_t>(scenario_index)),
                     static_cast<std::uint64_t>(replicate));
    RngStream data_stream(config.seed, replicate_key);

    TestRequest request;
    request.alternative = Alternative::greater;
    request.group1 = summarize_normal_draws(scenario.n1, scenario.mu1,
                                            std::sqrt(scenario.sigma1_sq), data_stream);
    request.group2 = summarize_normal_draws(scenario.n2, scenario.mu2,
                                            std::sqrt(scenario.sigma2_sq), data_stream);
    if (!(request.group1.s2 > 0.0) || !(request.group2.s2 > 0.0))
        throw DegenerateVariance("replicate " + std::to_string(replicate) +
                                 " produced a zero log-scale variance");

    for (std::size_t k = 0; k < config.methods.size(); ++k) {
        double p;
        switch (config.methods[k]) {
            case Method::gpv: {
                McSettings settings{config.inner_m,
                                    hash_combine(config.seed ^ replicate_key, kInnerGpvSalt)};
                p = gp_value(request, settings).estimate;
                break;
            }
            case Method::km: {
                McSettings settings{config.inner_m,
                                    hash_combine(config.seed ^ replicate_key, kInnerKmSalt)};
                p = km_gp_value(request, settings).estimate;
                break;
            }
            case Method::zscore:
            default:
                p = zhou_z_value(request).estimate;
                break;
        }
        if (p <= config.alpha)  // boundary ties count as rejections
            ++rejections[k];
    }
}

}  // namespace

ExperimentResult run_scenario(const Scenario& scenario,
                              const ExperimentConfig& config,
                              std::int64_t scenario_index) {
    validate(scenario);
    validate(config);

    const std::size_t n_methods = config.methods.size();
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const std::int64_t want = config.threads > 0 ? config.threads : static_cast<int>(hw);
    const std::int64_t n_threads = std::max<std::int64_t>(1, std::min(want, config.reps));

    std::vector<std::vector<std::int64_t>> partial(
        static_cast<std::size_t>(n_threads), std::vector<std::int64_t>(n_methods, 0));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(n_threads));

    auto worker = [&](std::int64_t t) {
        try {
            for (std::int64_t r = t; r < config.reps; r += n_threads)
                run_replicate(scenario, config, scenario_index, r,
                              partial[static_cast<std::size_t>(t)]);
        } catch (...) {
            failures[static_cast<std::size_t>(t)] = std::current_exception();
        }
    };

    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (std::int64_t t = 0; t < n_threads; ++t)
            pool.emplace_back(worker, t);
        for (auto& thread : pool) thread.join();
    }
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    ExperimentResult result;
    result.scenario = scenario;
    result.reps = config.reps;
    result.outcomes.resize(n_methods);
    for (std::size_t k = 0; k < n_methods; ++k) {
        std::int64_t count = 0;
        for (const auto& local : partial) count += local[k];
        const double rate = static_cast<double>(count) / static_cast<double>(config.reps);
        result.outcomes[k] = MethodOutcome{
            config.methods[k], count, rate,
            std::sqrt(rate * (1.0 - rate) / static_cast<double>(config.reps))};
    }
    return result;
}

std::vector<ExperimentResult> run_grid(std::span<const Scenario> scenarios,
                                       const ExperimentConfig& config) {
    std::vector<ExperimentResult> results;
    results.reserve(scenarios.size());
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        try {
            results.push_back(run_scenario(scenarios[i], config,
                                           static_cast<std::int64_t>(i)));
        } catch (const Error& e) {
            throw Error("scenario " + std::to_string(i) + ": " + e.what());
        }
    }
    return results;
}

}  // namespace lnmeans
