#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bridgemin/rng.hpp"

namespace bridgemin {

// Standard deviation convention for the midpoint displacement over n input
// intervals of a unit-rate Brownian path on [0,1].
//
//   kVarianceConsistent: sigma = 1/(2 sqrt(n)), the conditional std of the
//       midpoint of a gap of width 1/n (variance gap/4). Matches the bridge
//       covariance min(s,t) - s t.
//   kLegacySqrt2n: sigma = 1/sqrt(2n), i.e. variance gap/2 (twice the
//       conditional variance). Kept so the discrepancy can be measured;
//       it inflates Var at t = 1/2 to 1/2 instead of 1/4.
enum class NoiseConvention { kVarianceConsistent, kLegacySqrt2n };

// Midpoint displacement std for a fill-in over `intervals` input intervals.
// All fill paths in the project must obtain sigma through this function so
// array-level and keyed-store refinement agree bit for bit.
inline double midpoint_sigma(double intervals, NoiseConvention conv) {
    if (conv == NoiseConvention::kVarianceConsistent) {
        return 0.5 / std::sqrt(intervals);
    }
    return 1.0 / std::sqrt(2.0 * intervals);
}

// Shared midpoint expression; keeping it in one place makes coupled and
// standalone refinement produce identical doubles.
inline double conditional_midpoint(double left, double right, double sigma, double g) {
    return 0.5 * (left + right) + sigma * g;
}

// Brownian bridge fill-in: doubles the resolution of a sampled path.
// xs holds n+1 values (n input intervals); the result holds 2n+1 values with
// even entries copied verbatim and odd entries drawn as conditional
// midpoints. Consumes exactly n gaussians, in left-to-right order.
std::vector<double> bbfi(std::size_t intervals, std::span<const double> xs,
                         const GaussianSource& noise, NoiseConvention conv);

struct BridgeGrid {
    std::vector<double> values;  // 2^depth + 1 entries, pinned to 0 at both ends
    std::vector<double> times;   // k / 2^depth
};

// Depth-d bridge grid built from the pinned pair {0,0} by d rounds of
// fill-in (round r refines 2^{r-1} intervals). Consumes 2^d - 1 gaussians.
BridgeGrid init_bridge_grid(int depth, const GaussianSource& noise, NoiseConvention conv);

}  // namespace bridgemin
