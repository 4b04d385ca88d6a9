#include "bitchrom/memory_report.hpp"

namespace bitchrom {

MemoryReport memory_report(std::uint64_t length, const LayoutSpec& layout) {
    const UtilizationRatio packed = memory_utilization(length, layout);
    MemoryReport report;
    report.length = length;
    report.naive_bytes = length;
    report.packed_bytes = packed.allocated_bits / 8;
    report.utilization_naive = 0.125;
    report.utilization_packed = packed;
    report.ratio = static_cast<double>(report.naive_bytes) /
                   static_cast<double>(report.packed_bytes);
    return report;
}

} // namespace bitchrom
