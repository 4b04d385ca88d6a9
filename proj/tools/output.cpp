#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include <bitchrom/error.hpp>

namespace bitchrom::cli {

void write_output(const std::string& content, const OutputOptions& opts) {
    if (opts.out_path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) {
        throw Error(fmt::format("cannot open output file '{}'", opts.out_path));
    }
    out << content;
    if (!out) {
        throw Error(fmt::format("failed writing output file '{}'", opts.out_path));
    }
}

std::string Percent2::str() const {
    return fmt::format("{}.{:02}", whole, hundredths);
}

Percent2 truncated_percent(std::uint64_t numerator, std::uint64_t denominator) {
    const auto scaled =
        static_cast<unsigned __int128>(numerator) * 10000 / denominator;
    return Percent2{static_cast<std::uint64_t>(scaled / 100),
                    static_cast<unsigned>(scaled % 100)};
}

Percent2 truncated_percent(const UtilizationRatio& ratio) {
    return truncated_percent(ratio.allele_bits, ratio.allocated_bits);
}

std::string elide_bits(const std::string& bits) {
    constexpr std::size_t limit = 256;
    if (bits.size() <= limit) {
        return bits;
    }
    return fmt::format("{}...({} more)", bits.substr(0, limit), bits.size() - limit);
}

} // namespace bitchrom::cli
