#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace bridgemin {

// Streaming mean/variance (Welford) with min/max.
struct SummaryStats {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double min = 0.0;
    double max = 0.0;

    void push(double x) {
        if (n == 0) {
            min = max = x;
        } else {
            if (x < min) min = x;
            if (x > max) max = x;
        }
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
};

// Covariance of paired samples.
struct CovarianceStats {
    std::size_t n = 0;
    double mean_a = 0.0, mean_b = 0.0, comoment = 0.0;

    void push(double a, double b) {
        ++n;
        const double da = a - mean_a;
        mean_a += da / static_cast<double>(n);
        mean_b += (b - mean_b) / static_cast<double>(n);
        comoment += da * (b - mean_b);
    }
    double covariance() const { return n > 1 ? comoment / static_cast<double>(n - 1) : 0.0; }
};

// CDF of the chi distribution with 3 degrees of freedom (norm of a standard
// 3d gaussian): F(z) = 2 Phi(z) - 1 - sqrt(2/pi) z exp(-z^2/2).
double chi3_cdf(double z);

// CDF of |N(0, sigma^2)|.
double half_normal_cdf(double z, double sigma);

// Kolmogorov-Smirnov statistics. Inputs are copied and sorted internally.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic critical values: D_crit = c(alpha) / sqrt(n_eff) with
// c(alpha) = sqrt(-ln(alpha/2)/2).
double ks_critical(double alpha, std::size_t n);
double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m);

// Standard error of a binomial proportion.
double binomial_sigma(double p, std::size_t n);

// Empirical quantile (linear interpolation on the sorted copy).
double quantile(std::vector<double> samples, double q);

}  // namespace bridgemin
