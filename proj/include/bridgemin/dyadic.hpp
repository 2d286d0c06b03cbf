#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "bridgemin/rng.hpp"

namespace bridgemin {

// Hard representation limit: numerators must stay exact in 64-bit integers,
// and conversion to double must stay exact. Stores enforce their own, much
// lower, configured maximum.
inline constexpr int kMaxDyadicLevel = 62;

// An exact dyadic rational time on the unit circle: num / 2^level (mod 1).
// Canonical form: num odd, or num == 0 && level == 0 (time 0, which is the
// same circle point as time 1). Always construct through make() so equality
// and hashing can rely on canonical form.
struct DyadicTime {
    std::uint64_t num = 0;
    int level = 0;

    static DyadicTime make(std::uint64_t num, int level);

    // Exact (level <= 62 keeps the numerator inside the mantissa range).
    double to_double() const noexcept;

    friend bool operator==(const DyadicTime&, const DyadicTime&) = default;
};

// Canonicalize an arbitrary (num, level) pair: reduce mod 1, strip common
// factors of two. Idempotent.
DyadicTime canonicalize(std::uint64_t num, int level);

// Circle addition/subtraction. The result level never exceeds max(a,b).
DyadicTime add_mod1(DyadicTime a, DyadicTime b);
DyadicTime sub_mod1(DyadicTime a, DyadicTime b);

// Metric on R/Z: min over integers z of |a - b + z|. Always in [0, 1/2].
double circle_dist(double a, double b) noexcept;

struct DyadicTimeHash {
    std::size_t operator()(const DyadicTime& t) const noexcept {
        return static_cast<std::size_t>(key_fold(t.num, static_cast<std::uint64_t>(t.level)));
    }
};

// Index of the minimum value; ties broken by smallest index.
std::size_t grid_argmin(const double* xs, std::size_t n);

template <typename Container>
std::size_t grid_argmin(const Container& xs) {
    return grid_argmin(xs.data(), xs.size());
}

}  // namespace bridgemin
