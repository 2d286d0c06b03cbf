#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace bridgemin {

enum class Verdict { kGreen, kRedX };

// P(min of a unit-rate Brownian bridge over an interval of width h with
// endpoint values x, y is <= z). Equals 1 for z >= min(x,y) and
// exp(-2 (z-x)(z-y) / h) below; the exponential can underflow to 0 for very
// deep z at tiny h.
double interval_min_cdf(double x, double y, double z, double width);

// Inverse of the above in z: the u-quantile of the interval minimum,
//   z = (x+y)/2 - sqrt((x-y)^2/4 - h ln(u)/2),   u in (0,1).
// Monotone increasing in u, always <= min(x,y).
double sample_interval_min(double x, double y, double width, double u);

// One conditional-minimum draw for the interval (t_{k-1}, t_k).
struct IntervalMinSample {
    std::uint64_t interval = 0;  // k
    double left = 0;             // x = values[k-1]
    double right = 0;            // y = values[k]
    double u = 0;
    double min_value = 0;        // m
};

struct Certificate2Result {
    Verdict verdict = Verdict::kGreen;
    std::optional<std::uint64_t> failed_interval;
    std::vector<IntervalMinSample> samples;
};

// Certificate-2 sweep over a 2^d+1 grid: for every interval outside the
// middle half (interval k is exempt iff k-1 >= 2^{d-2} and
// k <= 2^{d-2} + 2^{d-1}), sample the conditional interval minimum with
// width 2^{-d} and compare against the grid minimum values[argmin_index].
// Red-X at the first (smallest-k) sample with m <= grid minimum; samples
// drawn up to and including the failure are returned.
Certificate2Result run_certificate2(std::span<const double> values, std::size_t argmin_index,
                                    int depth,
                                    const std::function<double(std::uint64_t)>& uniform_at);

}  // namespace bridgemin
