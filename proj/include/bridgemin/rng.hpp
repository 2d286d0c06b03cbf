#pragma once

#include <cstdint>
#include <functional>

namespace bridgemin {

// SplitMix64 finalizer (Steele, Lea & Flood 2014; fixed-increment variant by
// Vigna). Used both as a stream step and as the mixing stage of keyed draws.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Fold one word into a running key. Chaining mix64 gives full avalanche per
// word, which is all the keyed-noise scheme needs.
constexpr std::uint64_t key_fold(std::uint64_t key, std::uint64_t word) noexcept {
    return mix64(key ^ mix64(word));
}

// 64-bit word -> double strictly inside (0,1). Top 53 bits plus a half-ulp
// offset, so 0 and 1 are unreachable.
inline double to_unit_open(std::uint64_t w) noexcept {
    return (static_cast<double>(w >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal quantile, Wichura's algorithm AS 241 (PPND16 accuracy).
double normal_quantile(double p);

// Standard normal CDF via erfc.
double normal_cdf(double z);

// Domain separation tags for keyed draws. Every random variate in the
// project is a pure function of (seed, tag, coordinates); nothing depends
// on draw order.
namespace noise_tag {
inline constexpr std::uint64_t kMidpoint = 1;         // bridge midpoint gaussians
inline constexpr std::uint64_t kSequential = 2;       // sequential gaussian streams
inline constexpr std::uint64_t kIntervalUniform = 3;  // certificate-2 uniforms
inline constexpr std::uint64_t kTrialSeed = 4;        // per-trial seed derivation
inline constexpr std::uint64_t kUniformStream = 5;    // sequential uniform streams
}  // namespace noise_tag

// Counter-based keyed noise: deterministic, splittable, order-independent.
class KeyedNoise {
public:
    explicit KeyedNoise(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t word(std::uint64_t tag, std::uint64_t a, std::uint64_t b) const noexcept {
        return key_fold(key_fold(key_fold(seed_, tag), a), b);
    }
    double uniform(std::uint64_t tag, std::uint64_t a, std::uint64_t b) const noexcept {
        return to_unit_open(word(tag, a, b));
    }
    double gaussian(std::uint64_t tag, std::uint64_t a, std::uint64_t b) const {
        return normal_quantile(uniform(tag, a, b));
    }
    // Derived seed for an independent child stream (worker, trial, ...).
    std::uint64_t derive(std::uint64_t tag, std::uint64_t a, std::uint64_t b = 0) const noexcept {
        return word(tag, a, b);
    }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

// Sequential stream of standard normals, counter-based under the hood so a
// stream is reproducible from its seed alone.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : noise_(seed) {}
    double next() { return noise_.gaussian(noise_tag::kSequential, 0, counter_++); }
    std::uint64_t drawn() const noexcept { return counter_; }

private:
    KeyedNoise noise_;
    std::uint64_t counter_ = 0;
};

// Sequential stream of Uniform(0,1) variates.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : noise_(seed) {}
    double next() { return noise_.uniform(noise_tag::kUniformStream, 0, counter_++); }

private:
    KeyedNoise noise_;
    std::uint64_t counter_ = 0;
};

// Callable noise source consumed by array-level fill-in routines. Tests
// inject fixed values through this.
using GaussianSource = std::function<double()>;

inline GaussianSource gaussian_source(GaussianStream& stream) {
    return [&stream] { return stream.next(); };
}

}  // namespace bridgemin
