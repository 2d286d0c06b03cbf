#include "bridgemin/certificate2.hpp"

#include <cmath>
#include <stdexcept>

namespace bridgemin {

double interval_min_cdf(double x, double y, double z, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("interval_min_cdf: width must be positive");
    if (z >= std::min(x, y)) return 1.0;
    return std::exp(-2.0 * (z - x) * (z - y) / width);
}

double sample_interval_min(double x, double y, double width, double u) {
    if (!(width > 0.0)) throw std::invalid_argument("sample_interval_min: width must be positive");
    if (!(u > 0.0 && u < 1.0)) throw std::invalid_argument("sample_interval_min: u must lie in (0,1)");
    const double half_diff = 0.5 * (x - y);
    return 0.5 * (x + y) - std::sqrt(half_diff * half_diff - 0.5 * width * std::log(u));
}

Certificate2Result run_certificate2(std::span<const double> values, std::size_t argmin_index,
                                    int depth,
                                    const std::function<double(std::uint64_t)>& uniform_at) {
    if (depth < 3) throw std::invalid_argument("run_certificate2: depth must be >= 3");
    const std::size_t n = std::size_t{1} << depth;
    if (values.size() != n + 1) {
        throw std::invalid_argument("run_certificate2: expected 2^depth + 1 values");
    }
    if (argmin_index > n) throw std::out_of_range("run_certificate2: argmin index out of range");

    const double width = std::ldexp(1.0, -depth);
    const double grid_min = values[argmin_index];
    const std::size_t lo = n >> 2;        // 2^{d-2}
    const std::size_t hi = lo + (n >> 1); // 2^{d-2} + 2^{d-1}

    Certificate2Result result;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (k - 1 >= lo && k <= hi) continue;  // middle half: the next zoom re-examines it
        IntervalMinSample sample;
        sample.interval = k;
        sample.left = values[k - 1];
        sample.right = values[k];
        sample.u = uniform_at(k);
        sample.min_value = sample_interval_min(sample.left, sample.right, width, sample.u);
        result.samples.push_back(sample);
        if (sample.min_value <= grid_min) {
            result.verdict = Verdict::kRedX;
            result.failed_interval = k;
            break;
        }
    }
    return result;
}

}  // namespace bridgemin
