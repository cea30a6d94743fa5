#pragma once

#include <array>
#include <charconv>
#include <string>

namespace stacktree::detail {

/// Shortest decimal that round-trips to `value`; never prints "-0".
inline std::string format_shortest(double value) {
    if (value == 0.0) return "0";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    (void)ec;
    return std::string(buf.data(), ptr);
}

}  // namespace stacktree::detail

namespace stacktree::detail {

/// Fixed-point with at most `decimals` places, trailing zeros removed.
inline std::string format_trimmed(double value, int decimals) {
    std::array<char, 400> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed, decimals);
    (void)ec;
    std::string out(buf.data(), ptr);
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    if (out == "-0") out = "0";
    return out;
}

}  // namespace stacktree::detail
