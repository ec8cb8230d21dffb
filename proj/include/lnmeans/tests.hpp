#pragma once

#include <cstdint>

#include "lnmeans/summary.hpp"

namespace lnmeans {

enum class Method { gpv, km, zscore };

enum class Alternative {
    greater,   // H1: M1 > M2
    two_sided  // H1: M1 != M2
};

const char* to_string(Method method);
const char* to_string(Alternative alternative);

// A two-sample test problem: compare the means of two log-normal
// populations through the log-scale summaries of their samples.
struct TestRequest {
    LogSummary group1;
    LogSummary group2;
    Alternative alternative = Alternative::greater;
};

// Monte Carlo settings for the sampling-based methods.
struct McSettings {
    std::int64_t m = 100000;  // inner replicates, >= 1
    std::uint64_t seed = 0;
};

struct PValueResult {
    double estimate = 0;  // in [0, 1]
    double mc_se = 0;     // standard error of the one-sided MC average;
                          // doubled for two-sided results, 0 for zscore
    std::int64_t m = 0;   // replicates used (0 for deterministic methods)
    Method method = Method::gpv;
};

// Argument of the standard normal CDF inside the generalized p-value
// integrand, evaluated at chi-square pivot values (u1, u2):
//
//   (ybar2 - ybar1 + n2*s2^2/(2*u2) - n1*s1^2/(2*u1)) / sqrt(s1^2/u1 + s2^2/u2)
//
// Throws DegenerateVariance if either group has s2 == 0.
double phi_argument(const LogSummary& group1, const LogSummary& group2,
                    double u1, double u2);

// The generalized test variable
//
//   T = ybar1 - ybar2 + z*sqrt(s1^2/u1 + s2^2/u2)
//       + n1*s1^2/(2*u1) - n2*s2^2/(2*u2) - theta
//
// evaluated at explicit pivot values. Exposed for property checks; the
// p-value computations never need T itself.
double generalized_variable(const LogSummary& group1, const LogSummary& group2,
                            double theta, double z, double u1, double u2);

// Two-sided correction 2 * min{p, 1 - p}. Throws OutOfRange unless
// p lies in [0, 1].
double two_sided_adjust(double p);

// Method (a): Monte Carlo generalized p-value. Averages
// Phi(phi_argument(u1, u2)) over m independent pairs of chi-square
// pivots with n_i - 1 degrees of freedom.
PValueResult gp_value(const TestRequest& request, const McSettings& settings);

// P(G <= 0 | u1, u2) for the per-group pivot difference
//
//   G = [ybar1 - z1*sqrt(s1^2/u1) + n1*s1^2/(2*u1)]
//     - [ybar2 - z2*sqrt(s2^2/u2) + n2*s2^2/(2*u2)],
//
// z1, z2 independent standard normals. Conditionally on (u1, u2) the
// normal part collapses to a single centered normal with variance
// s1^2/u1 + s2^2/u2, so this equals Phi(phi_argument(u1, u2)).
double km_conditional_prob(const LogSummary& group1, const LogSummary& group2,
                           double u1, double u2);

// Method (b): generalized pivotal quantity with one pivot per group,
// averaged in Rao-Blackwellized form (the normal pivots integrated out
// conditionally on the chi-squares). Same estimand as gp_value; drawn
// from an independent stream.
PValueResult km_gp_value(const TestRequest& request, const McSettings& settings);

// Method (c): deterministic large-sample Z test on the log scale with
// unbiased variances v_i = n_i * s_i^2 / (n_i - 1):
//
//   Z = (ybar1 - ybar2 + (v1 - v2)/2)
//       / sqrt(v1/n1 + v2/n2 + v1^2/(2(n1-1)) + v2^2/(2(n2-1)))
//
// One-sided p = 1 - Phi(Z).
PValueResult zhou_z_value(const TestRequest& request);

// Deterministic cross-check for the Monte Carlo estimator: tensor-product
// quadrature of E[Phi(phi_argument(U1, U2))] over the two chi-square
// densities, each margin truncated to (eps, df + 40*sqrt(2*df)] with the
// truncated mass renormalized. grid_size (>= 64) is the per-margin node
// count; accept a value only once doubling grid_size moves it by < 1e-4.
double gp_value_quadrature(const TestRequest& request, int grid_size);

}  // namespace lnmeans
