#include "bridgemin/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bridgemin/rng.hpp"

namespace bridgemin {

double chi3_cdf(double z) {
    if (z <= 0.0) return 0.0;
    return 2.0 * normal_cdf(z) - 1.0 - std::sqrt(2.0 / M_PI) * z * std::exp(-0.5 * z * z);
}

double half_normal_cdf(double z, double sigma) {
    if (z <= 0.0) return 0.0;
    return 2.0 * normal_cdf(z / sigma) - 1.0;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks two-sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

namespace {
double ks_coefficient(double alpha) {
    return std::sqrt(-0.5 * std::log(alpha / 2.0));
}
}  // namespace

double ks_critical(double alpha, std::size_t n) {
    return ks_coefficient(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m) {
    const double n_eff =
        static_cast<double>(n) * static_cast<double>(m) / static_cast<double>(n + m);
    return ks_coefficient(alpha) / std::sqrt(n_eff);
}

double binomial_sigma(double p, std::size_t n) {
    if (n == 0) throw std::invalid_argument("binomial_sigma: n must be positive");
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double quantile(std::vector<double> samples, double q) {
    if (samples.empty()) throw std::invalid_argument("quantile: empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile: q must lie in [0,1]");
    std::sort(samples.begin(), samples.end());
    const double pos = q * static_cast<double>(samples.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= samples.size()) return samples.back();
    const double frac = pos - static_cast<double>(lo);
    return samples[lo] * (1.0 - frac) + samples[lo + 1] * frac;
}

}  // namespace bridgemin
