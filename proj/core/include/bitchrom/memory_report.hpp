#pragma once

#include <cstdint>

#include "bitchrom/layout.hpp"

namespace bitchrom {

/// Analytic packed-vs-naive memory accounting for one chromosome length.
/// Element counts times widths, no allocator overhead.
struct MemoryReport {
    std::uint64_t length = 0;
    std::uint64_t naive_bytes = 0;  // one byte per allele
    std::uint64_t packed_bytes = 0; // m * W / 8
    double utilization_naive = 0.0; // always exactly 0.125
    UtilizationRatio utilization_packed;
    double ratio = 0.0; // naive_bytes / packed_bytes
};

MemoryReport memory_report(std::uint64_t length, const LayoutSpec& layout);

} // namespace bitchrom
