#pragma once

#include <span>
#include <vector>

namespace lnmeans {

// Two-group data on the original (positive) scale.
using LogSample = std::vector<double>;

// Sufficient statistics of a log-transformed sample. s2 uses divisor n
// (the maximum-likelihood variance), not n - 1; the one consumer that
// needs the unbiased version converts locally.
struct LogSummary {
    int n = 0;       // observations, >= 2
    double ybar = 0; // mean of ln(values)
    double s2 = 0;   // variance of ln(values), divisor n
};

// Log-transform and summarize a sample of strictly positive values.
// Throws NonPositiveValue if any value <= 0, SampleTooSmall if fewer
// than two observations.
LogSummary summarize_log(std::span<const double> sample);

// Validation used by every test operation: n >= 2 and s2 strictly
// positive. Throws SampleTooSmall or DegenerateVariance.
void require_testable(const LogSummary& summary);

}  // namespace lnmeans
