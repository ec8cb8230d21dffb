// lnmeans command-line tool: two-sample tests for log-normal means and
// the size/power simulation engine behind them.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lnmeans/csv.hpp"
#include "lnmeans/errors.hpp"
#include "lnmeans/presets.hpp"
#include "lnmeans/simulation.hpp"
#include "lnmeans/summary.hpp"
#include "lnmeans/tests.hpp"

namespace {

using namespace lnmeans;

Method parse_method(const std::string& name) {
    if (name == "gpv") return Method::gpv;
    if (name == "km") return Method::km;
    if (name == "zscore") return Method::zscore;
    throw ParseError("unknown method '" + name + "' (expected gpv, km, or zscore)");
}

Alternative parse_alternative(const std::string& name) {
    if (name == "greater") return Alternative::greater;
    if (name == "two-sided" || name == "two_sided") return Alternative::two_sided;
    throw ParseError("unknown alternative '" + name +
                     "' (expected greater or two-sided)");
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> items;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ','))
        items.push_back(item);
    return items;
}

double parse_number(const std::string& field, const char* name) {
    double value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty() ||
        !std::isfinite(value))
        throw ParseError(std::string("--summary: field '") + name +
                         "' is not a finite number: '" + field + "'");
    return value;
}

// "n1,ybar1,s2_1,n2,ybar2,s2_2"
std::pair<LogSummary, LogSummary> parse_summary_flag(const std::string& flag) {
    const auto fields = split_list(flag);
    if (fields.size() != 6)
        throw ParseError("--summary expects n1,ybar1,s2_1,n2,ybar2,s2_2 (6 fields, got " +
                         std::to_string(fields.size()) + ")");
    const double n1 = parse_number(fields[0], "n1");
    const double n2 = parse_number(fields[3], "n2");
    if (n1 != static_cast<int>(n1) || n2 != static_cast<int>(n2))
        throw ParseError("--summary: sample sizes must be integers");
    LogSummary g1{static_cast<int>(n1), parse_number(fields[1], "ybar1"),
                  parse_number(fields[2], "s2_1")};
    LogSummary g2{static_cast<int>(n2), parse_number(fields[4], "ybar2"),
                  parse_number(fields[5], "s2_2")};
    require_testable(g1);
    require_testable(g2);
    return {g1, g2};
}

PValueResult dispatch(Method method, const TestRequest& request,
                      const McSettings& settings) {
    switch (method) {
        case Method::gpv: return gp_value(request, settings);
        case Method::km: return km_gp_value(request, settings);
        case Method::zscore:
        default: return zhou_z_value(request);
    }
}

int cmd_test(const std::string& data_path, const std::string& summary_flag,
             const std::string& method_name, const std::string& alternative_name,
             std::int64_t m, std::uint64_t seed) {
    if (data_path.empty() == summary_flag.empty())
        throw ParseError("exactly one of --data or --summary is required");

    TestRequest request;
    request.alternative = parse_alternative(alternative_name);
    if (!summary_flag.empty()) {
        std::tie(request.group1, request.group2) = parse_summary_flag(summary_flag);
    } else {
        std::ifstream in(data_path);
        if (!in)
            throw ParseError("cannot open data file '" + data_path + "'");
        const DataFile data = parse_data_csv(in);
        request.group1 = summarize_log(data.group1);
        request.group2 = summarize_log(data.group2);
    }

    const Method method = parse_method(method_name);
    const PValueResult result = dispatch(method, request, McSettings{m, seed});

    std::cout << "method=" << to_string(result.method) << '\n'
              << "alternative=" << to_string(request.alternative) << '\n'
              << "p=" << format_double(result.estimate) << '\n'
              << "mc_se=" << format_double(result.mc_se) << '\n'
              << "m=" << result.m << '\n'
              << "seed=" << seed << '\n';
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 std::int64_t reps, std::int64_t inner_m, double alpha,
                 std::uint64_t seed, int threads, const std::string& methods_flag) {
    ExperimentConfig config;
    config.reps = reps;
    config.inner_m = inner_m;
    config.alpha = alpha;
    config.seed = seed;
    config.threads = threads;
    if (!methods_flag.empty()) {
        config.methods.clear();
        for (const auto& name : split_list(methods_flag))
            config.methods.push_back(parse_method(name));
    }

    std::ifstream in(config_path);
    if (!in)
        throw ParseError("cannot open scenario file '" + config_path + "'");
    const std::vector<Scenario> scenarios = parse_scenario_csv(in);

    const auto results = run_grid(scenarios, config);
    write_file_atomic(out_path, results_to_csv(results));
    std::cout << "wrote " << out_path << " (" << results.size() << " scenarios, "
              << config.methods.size() << " methods)\n";
    return 0;
}

void print_grid_header() {
    std::printf("%-4s %-4s %-6s %-6s %-6s  %-9s %-9s %-9s %-9s %-9s %-9s\n", "n1",
                "n2", "mu1", "s1sq", "s2sq", "gpv", "ref", "km", "ref", "zscore",
                "ref");
}

void print_grid_row(const ReferenceRow& row, const ExperimentResult& result) {
    const Scenario& s = row.scenario;
    std::printf("%-4d %-4d %-6g %-6g %-6g  %-9s %-9s %-9s %-9s %-9s %-9s\n", s.n1,
                s.n2, s.mu1, s.sigma1_sq, s.sigma2_sq,
                format_double(result.outcomes[0].rate).c_str(),
                format_double(row.reference_rate[0]).c_str(),
                format_double(result.outcomes[1].rate).c_str(),
                format_double(row.reference_rate[1]).c_str(),
                format_double(result.outcomes[2].rate).c_str(),
                format_double(row.reference_rate[2]).c_str());
}

int reproduce_rainfall(std::int64_t m, std::uint64_t seed) {
    const TestRequest request{rainfall_seeded(), rainfall_unseeded(),
                              Alternative::greater};
    const auto reference = rainfall_reference();
    const McSettings settings{m, seed};

    std::printf("rainfall cloud-seeding comparison, one-sided (M1 > M2)\n");
    std::printf("group 1: n=26 ybar=5.134 s2=2.46   group 2: n=26 ybar=3.990 s2=2.60\n");
    std::printf("m=%lld seed=%llu\n\n", static_cast<long long>(m),
                static_cast<unsigned long long>(seed));
    std::printf("%-8s %-12s %-12s %-10s\n", "method", "p", "mc_se", "reference");
    const Method methods[] = {Method::gpv, Method::km, Method::zscore};
    for (int k = 0; k < 3; ++k) {
        const PValueResult result = dispatch(methods[k], request, settings);
        std::printf("%-8s %-12s %-12s %-10s\n", to_string(result.method),
                    format_double(result.estimate).c_str(),
                    format_double(result.mc_se).c_str(),
                    format_double(reference[k]).c_str());
    }
    return 0;
}

int reproduce_grid(std::span<const ReferenceRow> grid, std::span<const int> anchors,
                   bool full, const char* title, std::int64_t reps,
                   std::int64_t inner_m, std::uint64_t seed, int threads) {
    ExperimentConfig config;
    config.reps = reps;
    config.inner_m = inner_m;
    config.seed = seed;
    config.threads = threads;

    std::vector<Scenario> scenarios;
    std::vector<int> rows;
    if (full) {
        for (int i = 0; i < static_cast<int>(grid.size()); ++i) rows.push_back(i);
    } else {
        rows.assign(anchors.begin(), anchors.end());
    }
    scenarios.reserve(rows.size());
    for (const int i : rows) scenarios.push_back(grid[static_cast<std::size_t>(i)].scenario);

    std::printf("%s: %zu of %zu rows, alpha=0.05, reps=%lld, inner m=%lld, seed=%llu\n",
                title, rows.size(), grid.size(), static_cast<long long>(reps),
                static_cast<long long>(inner_m),
                static_cast<unsigned long long>(seed));
    std::printf("reference rates are published rejection counts / 10^4\n\n");
    print_grid_header();

    const auto results = run_grid(scenarios, config);
    for (std::size_t k = 0; k < rows.size(); ++k)
        print_grid_row(grid[static_cast<std::size_t>(rows[k])], results[k]);
    return 0;
}

int cmd_reproduce(const std::string& preset, const std::string& scale,
                  std::int64_t m, std::int64_t reps, std::int64_t inner_m,
                  std::uint64_t seed, int threads) {
    if (scale != "small" && scale != "full")
        throw ParseError("unknown --scale '" + scale + "' (expected small or full)");
    const bool full = scale == "full";
    if (preset == "rainfall")
        return reproduce_rainfall(m, seed);
    if (preset == "table2")
        return reproduce_grid(size_grid(), size_anchor_rows(), full,
                              "size study", reps, inner_m, seed, threads);
    if (preset == "table3")
        return reproduce_grid(power_grid(), power_anchor_rows(), full,
                              "power study", reps, inner_m, seed, threads);
    throw ParseError("unknown preset '" + preset +
                     "' (expected rainfall, table2, or table3)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-sample tests for the means of log-normal populations"};
    app.require_subcommand(1);

    // test
    auto* test = app.add_subcommand("test", "Test H0: M1 <= M2 on two samples");
    std::string data_path, summary_flag;
    std::string method_name = "gpv", alternative_name = "greater";
    std::int64_t test_m = 100000;
    std::uint64_t test_seed = 0;
    test->add_option("--data", data_path,
                     "CSV file with header 'group,value'; group 1 is the label "
                     "seen first");
    test->add_option("--summary", summary_flag,
                     "log-scale summaries n1,ybar1,s2_1,n2,ybar2,s2_2 "
                     "(s2 with divisor n)");
    test->add_option("--method", method_name, "gpv | km | zscore (default gpv)");
    test->add_option("--alternative", alternative_name,
                     "greater | two-sided (default greater)");
    test->add_option("--m", test_m, "Monte Carlo replicates (default 100000)");
    test->add_option("--seed", test_seed, "RNG seed (default 0)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Size/power sweep over a scenario grid");
    std::string config_path, out_path, methods_flag;
    std::int64_t sim_reps = 10000, sim_inner_m = 2000;
    double sim_alpha = 0.05;
    std::uint64_t sim_seed = 0;
    int sim_threads = 0;
    simulate->add_option("--config", config_path,
                         "scenario CSV with header 'n1,n2,mu1,mu2,s1sq,s2sq'")
        ->required();
    simulate->add_option("--out", out_path, "output CSV path")->required();
    simulate->add_option("--reps", sim_reps, "replicates per scenario (default 10000)");
    simulate->add_option("--inner-m", sim_inner_m,
                         "Monte Carlo replicates per test (default 2000)");
    simulate->add_option("--alpha", sim_alpha, "significance level (default 0.05)");
    simulate->add_option("--seed", sim_seed, "RNG seed (default 0)");
    simulate->add_option("--threads", sim_threads,
                         "worker threads, 0 = all cores (default 0)");
    simulate->add_option("--methods", methods_flag,
                         "comma list of gpv,km,zscore (default all three)");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "Re-run the built-in reference studies");
    std::string preset, scale = "small";
    std::int64_t rep_m = 1000000, rep_reps = 10000, rep_inner_m = 2000;
    std::uint64_t rep_seed = 0;
    int rep_threads = 0;
    reproduce->add_option("preset", preset, "rainfall | table2 | table3")->required();
    reproduce->add_option("--scale", scale,
                          "small = anchor rows only, full = whole grid (default small)");
    reproduce->add_option("--m", rep_m, "rainfall Monte Carlo replicates (default 10^6)");
    reproduce->add_option("--reps", rep_reps, "grid replicates per scenario (default 10^4)");
    reproduce->add_option("--inner-m", rep_inner_m,
                          "grid Monte Carlo replicates per test (default 2000)");
    reproduce->add_option("--seed", rep_seed, "RNG seed (default 0)");
    reproduce->add_option("--threads", rep_threads, "worker threads (default all cores)");

    try {
        app.parse(argc, argv);
        if (test->parsed())
            return cmd_test(data_path, summary_flag, method_name, alternative_name,
                            test_m, test_seed);
        if (simulate->parsed())
            return cmd_simulate(config_path, out_path, sim_reps, sim_inner_m, sim_alpha,
                                sim_seed, sim_threads, methods_flag);
        if (reproduce->parsed())
            return cmd_reproduce(preset, scale, rep_m, rep_reps, rep_inner_m, rep_seed,
                                 rep_threads);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SampleTooSmall& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NonPositiveValue& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DegenerateVariance& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidSettings& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidDf& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
