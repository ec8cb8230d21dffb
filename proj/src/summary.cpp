#include "lnmeans/summary.hpp"

#include <cmath>
#include <string>

#include "lnmeans/errors.hpp"

namespace lnmeans {

LogSummary summarize_log(std::span<const double> sample) {
    if (sample.size() < 2)
        throw SampleTooSmall("summarize_log: need at least 2 observations, got " +
                             std::to_string(sample.size()));

    const int n = static_cast<int>(sample.size());
    double sum = 0.0;
    std::vector<double> logs(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (!(sample[i] > 0.0))
            throw NonPositiveValue("summarize_log: value at position " +
                                   std::to_string(i) + " is not strictly positive");
        logs[i] = std::log(sample[i]);
        sum += logs[i];
    }
    const double ybar = sum / n;

    double ss = 0.0;
    for (const double y : logs) {
        const double d = y - ybar;
        ss += d * d;
    }
    return LogSummary{n, ybar, ss / n};
}

void require_testable(const LogSummary& summary) {
    if (summary.n < 2)
        throw SampleTooSmall("summary has n = " + std::to_string(summary.n) +
                             ", need n >= 2");
    if (!(summary.s2 > 0.0))
        throw DegenerateVariance("summary has s2 = " + std::to_string(summary.s2) +
                                 "; a strictly positive log-scale variance is required");
}

}  // namespace lnmeans
