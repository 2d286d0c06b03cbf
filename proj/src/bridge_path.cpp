#include "bridgemin/bridge_path.hpp"

#include <cmath>
#include <stdexcept>

namespace bridgemin {

LazyBridgePath::LazyBridgePath(std::uint64_t seed, BridgePathConfig config)
    : config_(config), noise_(seed) {
    gaussian_at_ = [this](DyadicTime t) {
        return noise_.gaussian(noise_tag::kMidpoint, t.num, static_cast<std::uint64_t>(t.level));
    };
}

LazyBridgePath::LazyBridgePath(std::function<double(DyadicTime)> gaussian_at,
                               BridgePathConfig config)
    : config_(config), noise_(0), gaussian_at_(std::move(gaussian_at)) {}

double LazyBridgePath::midpoint_sigma_at_level(int level) const {
    // A new value at level L is the midpoint of a gap of width 2^{-(L-1)},
    // i.e. a fill-in over 2^{L-1} unit intervals.
    return midpoint_sigma(std::ldexp(1.0, level - 1), config_.convention);
}

double LazyBridgePath::value_at(DyadicTime t) {
    if (t.num == 0) return 0.0;  // pinned: B(0) = B(1) = 0
    if (t.level > config_.max_level) {
        throw std::out_of_range("LazyBridgePath: level exceeds configured maximum");
    }
    if (auto it = values_.find(t); it != values_.end()) return it->second;

    const double left = value_at(canonicalize(t.num - 1, t.level));
    const double right = value_at(canonicalize(t.num + 1, t.level));
    const double value =
        conditional_midpoint(left, right, midpoint_sigma_at_level(t.level), gaussian_at_(t));
    values_.emplace(t, value);
    if (t.level > max_level_touched_) max_level_touched_ = t.level;
    return value;
}

std::vector<double> LazyBridgePath::refine_full(int level) const {
    if (level < 0 || level > config_.max_level) {
        throw std::out_of_range("refine_full: level exceeds configured maximum");
    }
    const std::size_t n = std::size_t{1} << level;
    std::vector<double> out(n, 0.0);
    for (int lev = 1; lev <= level; ++lev) {
        const std::size_t stride = n >> lev;
        const std::size_t points = std::size_t{1} << lev;
        const double sigma = midpoint_sigma_at_level(lev);
        for (std::size_t j = 1; j < points; j += 2) {
            const std::size_t idx = j * stride;
            const double left = out[idx - stride];
            const double right = out[(idx + stride) & (n - 1)];
            // j odd at lev >= 1 is already canonical.
            const double g = gaussian_at_(DyadicTime{j, lev});
            out[idx] = conditional_midpoint(left, right, sigma, g);
        }
    }
    return out;
}

}  // namespace bridgemin
