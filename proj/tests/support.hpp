#pragma once

#include <vector>

// Test-only reference implementations, kept independent of the library's
// computation paths on purpose: the library uses erfc and sampling, the
// checks here use series/continued-fraction evaluation and empirical CDFs.
namespace testsupport {

// Standard normal CDF to (well beyond) 1e-15 absolute accuracy, built
// from the Maclaurin series of Phi in the bulk and the Mills-ratio
// continued fraction in the tails. Long double arithmetic throughout.
double normal_cdf_oracle(double x);

// One-sample Kolmogorov-Smirnov statistic against Uniform(0,1).
// Sorts its argument.
double ks_statistic_uniform(std::vector<double> values);

// Two-sample Kolmogorov-Smirnov statistic. Sorts its arguments.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic Kolmogorov critical value at alpha = 0.01: reject when
// D > critical / sqrt(n_eff).
inline constexpr double kKolmogorov01 = 1.62762;

}  // namespace testsupport
