#include "lnmeans/tests.hpp"

#include <cmath>
#include <vector>

#include "lnmeans/distributions.hpp"
#include "lnmeans/errors.hpp"
#include "lnmeans/rng.hpp"

namespace lnmeans {

const char* to_string(Method method) {
    switch (method) {
        case Method::gpv: return "gpv";
        case Method::km: return "km";
        case Method::zscore: return "zscore";
    }
    return "?";
}

const char* to_string(Alternative alternative) {
    return alternative == Alternative::greater ? "greater" : "two_sided";
}

namespace {

// Internal stream ids: methods (a) and (b) estimate the same quantity,
// so they draw from distinct substreams of the user's seed to stay
// independent Monte Carlo runs.
constexpr std::uint64_t kGpvStreamId = 0;
constexpr std::uint64_t kKmStreamId = 1;

void require_pair_testable(const TestRequest& request) {
    require_testable(request.group1);
    require_testable(request.group2);
}

void require_positive_variances(const LogSummary& g1, const LogSummary& g2) {
    if (!(g1.s2 > 0.0) || !(g2.s2 > 0.0))
        throw DegenerateVariance("phi argument undefined: a group has s2 = 0");
}

// Shared driver for the two Monte Carlo methods: average `integrand`
// over m independent chi-square pivot pairs and attach the standard
// error of the average.
template <typename Integrand>
PValueResult mc_average(const TestRequest& request, const McSettings& settings,
                        Method method, std::uint64_t stream_id,
                        Integrand&& integrand) {
    require_pair_testable(request);
    if (settings.m < 1)
        throw InvalidSettings("Monte Carlo replicate count m must be >= 1");

    const int df1 = request.group1.n - 1;
    const int df2 = request.group2.n - 1;
    RngStream stream(settings.seed, stream_id);

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t l = 0; l < settings.m; ++l) {
        const double u1 = chi_square_sample(df1, stream);
        const double u2 = chi_square_sample(df2, stream);
        const double term = integrand(u1, u2);
        sum += term;
        sum_sq += term * term;
    }

    const double m = static_cast<double>(settings.m);
    const double mean = sum / m;
    double se = 0.0;
    if (settings.m > 1) {
        double var = (sum_sq - m * mean * mean) / (m - 1.0);
        if (var < 0.0) var = 0.0;  // rounding guard near-constant integrands
        se = std::sqrt(var / m);
    }

    PValueResult result;
    result.method = method;
    result.m = settings.m;
    if (request.alternative == Alternative::two_sided) {
        result.estimate = two_sided_adjust(mean);
        result.mc_se = 2.0 * se;  // delta method on 2*min{p, 1-p}
    } else {
        result.estimate = mean;
        result.mc_se = se;
    }
    return result;
}

}  // namespace

double phi_argument(const LogSummary& group1, const LogSummary& group2,
                    double u1, double u2) {
    require_positive_variances(group1, group2);
    const double numerator = group2.ybar - group1.ybar +
                             group2.n * group2.s2 / (2.0 * u2) -
                             group1.n * group1.s2 / (2.0 * u1);
    const double denominator = std::sqrt(group1.s2 / u1 + group2.s2 / u2);
    return numerator / denominator;
}

double generalized_variable(const LogSummary& group1, const LogSummary& group2,
                            double theta, double z, double u1, double u2) {
    require_positive_variances(group1, group2);
    return group1.ybar - group2.ybar +
           z * std::sqrt(group1.s2 / u1 + group2.s2 / u2) +
           group1.n * group1.s2 / (2.0 * u1) -
           group2.n * group2.s2 / (2.0 * u2) - theta;
}

double two_sided_adjust(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw OutOfRange("two_sided_adjust: p must lie in [0, 1]");
    return 2.0 * std::min(p, 1.0 - p);
}

PValueResult gp_value(const TestRequest& request, const McSettings& settings) {
    const LogSummary& g1 = request.group1;
    const LogSummary& g2 = request.group2;
    return mc_average(request, settings, Method::gpv, kGpvStreamId,
                      [&](double u1, double u2) {
                          return std_normal_cdf(phi_argument(g1, g2, u1, u2));
                      });
}

double km_conditional_prob(const LogSummary& group1, const LogSummary& group2,
                           double u1, double u2) {
    require_positive_variances(group1, group2);
    // G | (u1, u2) ~ N(mean_g, sd_g^2); return P(G <= 0 | u1, u2).
    const double mean_g = group1.ybar + group1.n * group1.s2 / (2.0 * u1) -
                          group2.ybar - group2.n * group2.s2 / (2.0 * u2);
    const double sd_g = std::sqrt(group1.s2 / u1 + group2.s2 / u2);
    return std_normal_cdf(-mean_g / sd_g);
}

PValueResult km_gp_value(const TestRequest& request, const McSettings& settings) {
    const LogSummary& g1 = request.group1;
    const LogSummary& g2 = request.group2;
    return mc_average(request, settings, Method::km, kKmStreamId,
                      [&](double u1, double u2) {
                          return km_conditional_prob(g1, g2, u1, u2);
                      });
}

PValueResult zhou_z_value(const TestRequest& request) {
    require_pair_testable(request);
    const LogSummary& g1 = request.group1;
    const LogSummary& g2 = request.group2;

    // Unbiased log-scale variances, divisor n - 1.
    const double v1 = g1.n * g1.s2 / (g1.n - 1.0);
    const double v2 = g2.n * g2.s2 / (g2.n - 1.0);
    const double numerator = g1.ybar - g2.ybar + 0.5 * (v1 - v2);
    const double variance = v1 / g1.n + v2 / g2.n +
                            v1 * v1 / (2.0 * (g1.n - 1.0)) +
                            v2 * v2 / (2.0 * (g2.n - 1.0));
    const double z = numerator / std::sqrt(variance);

    PValueResult result;
    result.method = Method::zscore;
    result.m = 0;
    result.mc_se = 0.0;
    const double one_sided = 1.0 - std_normal_cdf(z);
    result.estimate = request.alternative == Alternative::two_sided
                          ? two_sided_adjust(one_sided)
                          : one_sided;
    return result;
}

namespace {

struct QuadratureMargin {
    std::vector<double> nodes;
    std::vector<double> weights;  // include the chi-square density; sum to 1
};

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr double kGlNodes[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498, 0.5255324099163290,
    0.7966664774136267, 0.9602898564975363};
constexpr double kGlWeights[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

// Composite Gauss-Legendre rule for E[f(U)], U ~ chi^2_df, laid out on
// t = ln u so the df = 1 endpoint singularity integrates smoothly. The
// margin covers (lo, hi] with hi = df + 40*sqrt(2*df) and lo placed
// where the lower tail mass falls below ~1e-10; the weights are then
// renormalized to absorb both truncation and discretization of the
// density mass.
QuadratureMargin chi_square_margin(int df, int grid_size) {
    const double dfd = static_cast<double>(df);
    const double hi = dfd + 40.0 * std::sqrt(2.0 * dfd);
    // Leading-order bound P(U <= x) <= (x/2)^(df/2) / Gamma(df/2 + 1),
    // inverted at 1e-10.
    double lo = 2.0 * std::exp((2.0 / dfd) *
                               (std::log(1e-10) + std::lgamma(0.5 * dfd + 1.0)));
    lo = std::min(lo, 0.25 * dfd);
    lo = std::max(lo, 1e-300);

    const int panels = (grid_size + 7) / 8;
    const double t_lo = std::log(lo);
    const double t_hi = std::log(hi);
    const double width = (t_hi - t_lo) / panels;
    const double log_norm = std::lgamma(0.5 * dfd) + 0.5 * dfd * std::log(2.0);

    QuadratureMargin margin;
    margin.nodes.reserve(static_cast<std::size_t>(panels) * 8);
    margin.weights.reserve(static_cast<std::size_t>(panels) * 8);

    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double center = t_lo + (p + 0.5) * width;
        for (int k = 0; k < 8; ++k) {
            const double t = center + 0.5 * width * kGlNodes[k];
            const double u = std::exp(t);
            // u * pdf(u) from the ln-substitution Jacobian:
            // exp((df/2)*t - u/2) / (Gamma(df/2) * 2^(df/2))
            const double w = 0.5 * width * kGlWeights[k] *
                             std::exp(0.5 * dfd * t - 0.5 * u - log_norm);
            margin.nodes.push_back(u);
            margin.weights.push_back(w);
            total += w;
        }
    }
    for (double& w : margin.weights) w /= total;
    return margin;
}

}  // namespace

double gp_value_quadrature(const TestRequest& request, int grid_size) {
    require_pair_testable(request);
    if (grid_size < 64)
        throw InvalidSettings("gp_value_quadrature: grid_size must be >= 64");

    const LogSummary& g1 = request.group1;
    const LogSummary& g2 = request.group2;
    const QuadratureMargin m1 = chi_square_margin(g1.n - 1, grid_size);
    const QuadratureMargin m2 = chi_square_margin(g2.n - 1, grid_size);

    double p = 0.0;
    for (std::size_t i = 0; i < m1.nodes.size(); ++i) {
        const double u1 = m1.nodes[i];
        double row = 0.0;
        for (std::size_t j = 0; j < m2.nodes.size(); ++j) {
            row += m2.weights[j] *
                   std_normal_cdf(phi_argument(g1, g2, u1, m2.nodes[j]));
        }
        p += m1.weights[i] * row;
    }
    return request.alternative == Alternative::two_sided ? two_sided_adjust(p) : p;
}

}  // namespace lnmeans
