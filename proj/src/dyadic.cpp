#include "bridgemin/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace bridgemin {

DyadicTime canonicalize(std::uint64_t num, int level) {
    if (level < 0 || level > kMaxDyadicLevel) {
        throw std::invalid_argument("DyadicTime: level out of range");
    }
    if (level == 0) return DyadicTime{0, 0};  // every integer is 0 mod 1
    num %= (1ULL << level);
    if (num == 0) return DyadicTime{0, 0};
    while ((num & 1ULL) == 0) {
        num >>= 1;
        --level;
    }
    return DyadicTime{num, level};
}

DyadicTime DyadicTime::make(std::uint64_t num, int level) {
    return canonicalize(num, level);
}

double DyadicTime::to_double() const noexcept {
    return std::ldexp(static_cast<double>(num), -level);
}

DyadicTime add_mod1(DyadicTime a, DyadicTime b) {
    const int m = a.level > b.level ? a.level : b.level;
    const std::uint64_t na = a.num << (m - a.level);
    const std::uint64_t nb = b.num << (m - b.level);
    return canonicalize(na + nb, m);
}

DyadicTime sub_mod1(DyadicTime a, DyadicTime b) {
    const int m = a.level > b.level ? a.level : b.level;
    const std::uint64_t na = a.num << (m - a.level);
    const std::uint64_t nb = b.num << (m - b.level);
    const std::uint64_t modulus = 1ULL << m;  // m <= 62
    return canonicalize(na + (modulus - nb % modulus), m);
}

double circle_dist(double a, double b) noexcept {
    double frac = std::abs(a - b);
    frac -= std::floor(frac);
    return frac <= 0.5 ? frac : 1.0 - frac;
}

std::size_t grid_argmin(const double* xs, std::size_t n) {
    if (n == 0) throw std::invalid_argument("grid_argmin: empty input");
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (xs[i] < xs[best]) best = i;
    }
    return best;
}

}  // namespace bridgemin
