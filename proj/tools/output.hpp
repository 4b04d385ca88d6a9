#pragma once

#include <cstdint>
#include <string>

#include <bitchrom/layout.hpp>

namespace bitchrom::cli {

struct OutputOptions {
    std::string format = "text"; // text | json | csv
    std::string out_path;        // empty = stdout
};

/// Writes to stdout or --out PATH. Throws Error on I/O failure.
void write_output(const std::string& content, const OutputOptions& opts);

/// Percentage truncated (not rounded) to two decimals, computed in integer
/// arithmetic from the exact ratio.
struct Percent2 {
    std::uint64_t whole = 0;
    unsigned hundredths = 0;

    double value() const { return static_cast<double>(whole) + hundredths / 100.0; }
    std::string str() const;
};

Percent2 truncated_percent(const UtilizationRatio& ratio);
Percent2 truncated_percent(std::uint64_t numerator, std::uint64_t denominator);

/// Bit strings longer than 256 characters are elided for text output.
std::string elide_bits(const std::string& bits);

} // namespace bitchrom::cli
