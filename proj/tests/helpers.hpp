#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bitchrom::testing {

inline std::vector<std::uint8_t> bits_of(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        bits.push_back(c == '1' ? 1 : 0);
    }
    return bits;
}

inline std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

} // namespace bitchrom::testing
