#pragma once

#include "lnmeans/rng.hpp"

namespace lnmeans {

// Mean of a log-normal variable whose logarithm is N(mu, sigma_sq):
// exp(mu + sigma_sq / 2). Throws OutOfRange if sigma_sq < 0 or the
// result overflows to infinity.
double lognormal_mean(double mu, double sigma_sq);

// Standard normal distribution function, Phi(x) = erfc(-x / sqrt(2)) / 2.
// Absolute error below 1e-15 over the double range.
double std_normal_cdf(double x);

// Inverse of std_normal_cdf for p in (0, 1). Wichura's algorithm AS 241
// (PPND16), relative error around 1e-15. Throws OutOfRange outside (0, 1).
double std_normal_quantile(double p);

// One N(0, 1) draw. Consumes exactly one uniform from the stream
// (inverse-CDF sampling), so sequences stay aligned across methods.
double std_normal_sample(RngStream& stream);

// One chi-square draw with df >= 1 degrees of freedom; strictly positive.
// Throws InvalidDf for df < 1.
double chi_square_sample(int df, RngStream& stream);

}  // namespace lnmeans
