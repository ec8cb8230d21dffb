#include "lnmeans/distributions.hpp"

#include <cmath>

#include "lnmeans/errors.hpp"

namespace lnmeans {

double lognormal_mean(double mu, double sigma_sq) {
    if (sigma_sq < 0)
        throw OutOfRange("lognormal_mean: sigma_sq must be nonnegative");
    const double mean = std::exp(mu + 0.5 * sigma_sq);
    if (!std::isfinite(mean))
        throw OutOfRange("lognormal_mean: exp(mu + sigma_sq/2) overflows");
    return mean;
}

double std_normal_cdf(double x) {
    // Phi(x) = erfc(-x / sqrt(2)) / 2; erfc carries the full precision in
    // both tails, unlike 0.5 * (1 + erf(.)).
    static const double inv_sqrt2 = 0.7071067811865475244;
    return 0.5 * std::erfc(-x * inv_sqrt2);
}

double std_normal_quantile(double p) {
    // Wichura (1988), algorithm AS 241, routine PPND16.
    if (!(p > 0.0 && p < 1.0))
        throw OutOfRange("std_normal_quantile: p must lie in (0, 1)");

    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }

    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -x : x;
}

double std_normal_sample(RngStream& stream) {
    return std_normal_quantile(stream.next_open_double());
}

namespace {

// One Gamma(alpha, 1) draw for alpha >= 1, Marsaglia & Tsang (2000).
double gamma_sample_mt(double alpha, RngStream& stream) {
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = std_normal_sample(stream);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.next_open_double();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2)
            return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

}  // namespace

double chi_square_sample(int df, RngStream& stream) {
    if (df < 1)
        throw InvalidDf("chi_square_sample: df must be >= 1");
    if (df == 1) {
        // chi^2_1 is exactly the square of a standard normal
        const double z = std_normal_sample(stream);
        double value = z * z;
        if (value <= 0.0)
            value = 5e-324;  // subnormal floor keeps the support open at 0
        return value;
    }
    return 2.0 * gamma_sample_mt(0.5 * df, stream);
}

}  // namespace lnmeans
