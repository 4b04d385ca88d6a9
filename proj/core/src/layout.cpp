#include "bitchrom/layout.hpp"

#include <limits>

#include <fmt/format.h>

namespace bitchrom {

std::string to_string(Signedness s) {
    return s == Signedness::Signed ? "signed" : "unsigned";
}

LayoutSpec::LayoutSpec(unsigned element_width, Signedness signedness)
    : width_(element_width), signedness_(signedness) {
    if (width_ != 8 && width_ != 16 && width_ != 32 && width_ != 64) {
        throw ConfigurationError(
            fmt::format("element_width must be one of 8, 16, 32, 64 (got {})", width_));
    }
}

namespace {

std::uint64_t low_bits(unsigned count) {
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

} // namespace

std::uint64_t LayoutSpec::metadata_cap() const {
    return low_bits(usable_bits());
}

std::uint64_t LayoutSpec::width_mask() const {
    return low_bits(width_);
}

std::vector<LayoutSpec> all_layouts() {
    std::vector<LayoutSpec> out;
    for (Signedness s : {Signedness::Unsigned, Signedness::Signed}) {
        for (unsigned w : {8u, 16u, 32u, 64u}) {
            out.emplace_back(w, s);
        }
    }
    return out;
}

std::uint64_t padding_offset(std::uint64_t length, const LayoutSpec& layout) {
    const std::uint64_t n = layout.usable_bits();
    return (n - length % n) % n;
}

std::uint64_t calculate_array_dim(std::uint64_t length, const LayoutSpec& layout) {
    if (length == 0) {
        throw InvalidLengthError("chromosome length must be at least 1");
    }
    const std::uint64_t n = layout.usable_bits();
    return 1 + (length + n - 1) / n;
}

std::uint64_t max_chromosome_length(const LayoutSpec& layout, std::uint64_t max_elements) {
    if (max_elements < 2) {
        throw InvalidCapacityError(fmt::format(
            "array capacity must be at least 2 elements, got {} (metadata leaves no allele element)",
            max_elements));
    }
    const std::uint64_t n = layout.usable_bits();
    const std::uint64_t cap = layout.metadata_cap();
    const std::uint64_t data_elements = max_elements - 1;
    if (data_elements > std::numeric_limits<std::uint64_t>::max() / n) {
        return cap; // n * (M - 1) overflows uint64, so it exceeds any metadata cap
    }
    return std::min(cap, n * data_elements);
}

UtilizationRatio memory_utilization(std::uint64_t length, const LayoutSpec& layout) {
    const std::uint64_t m = calculate_array_dim(length, layout);
    const auto total = static_cast<unsigned __int128>(m) * layout.element_width();
    if (total > std::numeric_limits<std::uint64_t>::max()) {
        throw InvalidLengthError("allocated bit count overflows 64 bits");
    }
    return UtilizationRatio{length, static_cast<std::uint64_t>(total)};
}

std::vector<UtilizationTableRow> utilization_table(Signedness signedness,
                                                   std::uint64_t max_elements) {
    std::vector<UtilizationTableRow> rows;
    for (unsigned width : {8u, 16u, 32u, 64u}) {
        const LayoutSpec layout(width, signedness);
        const std::uint64_t max_len = max_chromosome_length(layout, max_elements);
        const std::uint64_t n = layout.usable_bits();
        const auto capacity_bits = static_cast<unsigned __int128>(n) * (max_elements - 1);
        constexpr auto u64_max = std::numeric_limits<std::uint64_t>::max();
        rows.push_back(UtilizationTableRow{
            width,
            signedness,
            layout.metadata_cap(),
            capacity_bits > u64_max ? u64_max : static_cast<std::uint64_t>(capacity_bits),
            max_len,
            memory_utilization(max_len, layout),
        });
    }
    return rows;
}

} // namespace bitchrom
