#include "support.hpp"

#include <algorithm>
#include <cmath>

namespace testsupport {

namespace {

const long double kInvSqrt2Pi = 0.398942280401432677939946L;

long double normal_pdf_l(long double x) {
    return kInvSqrt2Pi * std::exp(-0.5L * x * x);
}

// Phi(x) = 1/2 + pdf(x) * sum_{k>=0} x^(2k+1) / (1*3*5*...*(2k+1)).
// All terms share the sign of x, so there is no cancellation; converges
// for the |x| <= 6.5 range it is used on.
long double phi_series(long double x) {
    long double term = x;
    long double sum = x;
    long double odd = 1.0L;
    for (int k = 1; k < 500; ++k) {
        odd += 2.0L;
        term *= x * x / odd;
        sum += term;
        if (std::fabs(term) <= 1e-25L * std::fabs(sum)) break;
    }
    return 0.5L + normal_pdf_l(x) * sum;
}

// Upper tail Q(x) = pdf(x) / (x + 1/(x + 2/(x + 3/(...)))), x > 0.
long double upper_tail_cf(long double x) {
    long double t = x;
    for (int k = 160; k >= 1; --k)
        t = x + k / t;
    return normal_pdf_l(x) / t;
}

}  // namespace

double normal_cdf_oracle(double x) {
    const long double xl = x;
    if (std::fabs(x) <= 6.5)
        return static_cast<double>(phi_series(xl));
    if (x > 0)
        return static_cast<double>(1.0L - upper_tail_cf(xl));
    return static_cast<double>(upper_tail_cf(-xl));
}

double ks_statistic_uniform(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double hi = (i + 1) / n - values[i];
        const double lo = values[i] - i / n;
        d = std::max({d, hi, lo});
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double value = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= value) ++i;
        while (j < b.size() && b[j] <= value) ++j;
        d = std::max(d, std::fabs(i / na - j / nb));
    }
    return d;
}

}  // namespace testsupport
