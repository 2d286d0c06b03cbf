#pragma once

#include <charconv>
#include <string>

namespace bridgemin {

// Shortest decimal form that round-trips the exact double.
inline std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace bridgemin
