#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "bridgemin/bridge_fill.hpp"
#include "bridgemin/dyadic.hpp"
#include "bridgemin/rng.hpp"

namespace bridgemin {

struct BridgePathConfig {
    int max_level = 40;
    NoiseConvention convention = NoiseConvention::kVarianceConsistent;
};

// Lazily sampled Brownian bridge on the dyadic rationals of the circle,
// pinned to 0 at time 0. A value at level L is drawn from its conditional
// law given the two level-(L-1) neighbours, which are materialized first.
//
// The gaussian behind each dyadic time is keyed by (seed, num, level), so
// stored values do not depend on request order, and a full-grid refinement
// reproduces exactly the values an incremental consumer saw. Once stored, a
// value is never overwritten.
//
// A path instance belongs to a single trial; access within a trial is
// single-threaded.
class LazyBridgePath {
public:
    explicit LazyBridgePath(std::uint64_t seed, BridgePathConfig config = {});

    // Test hook: supply the gaussian for each dyadic time directly.
    LazyBridgePath(std::function<double(DyadicTime)> gaussian_at, BridgePathConfig config = {});

    // Value at a canonical dyadic time, sampling (and storing) any missing
    // ancestors on the way. Throws if the level exceeds the configured max.
    double value_at(DyadicTime t);

    // Every value k/2^L for k in {0,...,2^L - 1}, in index order. Produces
    // exactly the numbers value_at would return, without touching the store.
    std::vector<double> refine_full(int level) const;

    int max_level_touched() const noexcept { return max_level_touched_; }
    std::size_t stored_count() const noexcept { return values_.size(); }
    std::uint64_t seed() const noexcept { return noise_.seed(); }
    const BridgePathConfig& config() const noexcept { return config_; }
    const KeyedNoise& noise() const noexcept { return noise_; }

private:
    double midpoint_sigma_at_level(int level) const;

    BridgePathConfig config_;
    KeyedNoise noise_;
    std::function<double(DyadicTime)> gaussian_at_;
    std::unordered_map<DyadicTime, double, DyadicTimeHash> values_;
    int max_level_touched_ = 0;
};

}  // namespace bridgemin
