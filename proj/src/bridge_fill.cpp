#include "bridgemin/bridge_fill.hpp"

#include <cmath>
#include <stdexcept>

namespace bridgemin {

std::vector<double> bbfi(std::size_t intervals, std::span<const double> xs,
                         const GaussianSource& noise, NoiseConvention conv) {
    if (intervals == 0 || xs.size() != intervals + 1) {
        throw std::invalid_argument("bbfi: expected exactly intervals+1 input values");
    }
    const double sigma = midpoint_sigma(static_cast<double>(intervals), conv);
    std::vector<double> out(2 * intervals + 1);
    for (std::size_t k = 0; k <= intervals; ++k) out[2 * k] = xs[k];
    for (std::size_t k = 1; k <= intervals; ++k) {
        out[2 * k - 1] = conditional_midpoint(xs[k - 1], xs[k], sigma, noise());
    }
    return out;
}

BridgeGrid init_bridge_grid(int depth, const GaussianSource& noise, NoiseConvention conv) {
    if (depth < 1 || depth > 40) {
        throw std::invalid_argument("init_bridge_grid: depth out of range");
    }
    const std::size_t n = std::size_t{1} << depth;
    BridgeGrid grid;
    grid.times.resize(n + 1);
    const double inv = std::ldexp(1.0, -depth);
    for (std::size_t k = 0; k <= n; ++k) grid.times[k] = static_cast<double>(k) * inv;

    grid.values = {0.0, 0.0};
    for (int r = 1; r <= depth; ++r) {
        grid.values = bbfi(std::size_t{1} << (r - 1), grid.values, noise, conv);
    }
    return grid;
}

}  // namespace bridgemin
