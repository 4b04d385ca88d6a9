#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bitchrom/error.hpp"

namespace bitchrom {

enum class Signedness { Unsigned, Signed };

std::string to_string(Signedness s);

/// Element layout of a packed chromosome: machine-word width W and the
/// number n of bits per word that may carry alleles. n == W for unsigned
/// words; signed words keep their MSB (the sign bit) permanently clear,
/// so n == W - 1.
class LayoutSpec {
public:
    /// Defaults to 64-bit unsigned words.
    LayoutSpec() = default;
    LayoutSpec(unsigned element_width, Signedness signedness);

    unsigned element_width() const { return width_; }
    Signedness signedness() const { return signedness_; }
    bool is_signed() const { return signedness_ == Signedness::Signed; }
    unsigned usable_bits() const { return is_signed() ? width_ - 1 : width_; }

    /// Largest value storable in the metadata element: 2^n - 1.
    std::uint64_t metadata_cap() const;
    /// Mask of the n usable (low) bits of a word.
    std::uint64_t usable_mask() const { return metadata_cap(); }
    /// Mask of all W bits of a word.
    std::uint64_t width_mask() const;

    bool operator==(const LayoutSpec&) const = default;

private:
    unsigned width_ = 64;
    Signedness signedness_ = Signedness::Unsigned;
};

/// All eight layouts: widths {8,16,32,64} x {unsigned, signed}.
std::vector<LayoutSpec> all_layouts();

/// Unused high usable bits in the first data element: (n - L mod n) mod n.
/// The alleles start right after them, so the last element is always full.
std::uint64_t padding_offset(std::uint64_t length, const LayoutSpec& layout);

/// Elements needed for a chromosome of the given length, metadata element
/// included: 1 + ceil(L / n). Throws InvalidLengthError for length 0.
std::uint64_t calculate_array_dim(std::uint64_t length, const LayoutSpec& layout);

/// Longest chromosome representable when the array holds at most
/// max_elements elements: min(metadata cap, n * (max_elements - 1)).
/// Throws InvalidCapacityError when max_elements < 2 (no allele element).
std::uint64_t max_chromosome_length(const LayoutSpec& layout, std::uint64_t max_elements);

/// Fraction of allocated bits that carry allele data, kept as an exact
/// integer ratio. The denominator counts full word widths, sign bits and
/// padding included.
struct UtilizationRatio {
    std::uint64_t allele_bits = 0;    // L
    std::uint64_t allocated_bits = 0; // m * W

    double value() const {
        return static_cast<double>(allele_bits) / static_cast<double>(allocated_bits);
    }
    double percent() const { return 100.0 * value(); }
};

UtilizationRatio memory_utilization(std::uint64_t length, const LayoutSpec& layout);

/// One row of the per-width utilization summary for a fixed array capacity:
/// the longest representable chromosome and its utilization.
struct UtilizationTableRow {
    unsigned element_width;
    Signedness signedness;
    std::uint64_t metadata_cap;
    std::uint64_t array_capacity_bits; // n * (max_elements - 1)
    std::uint64_t max_length;
    UtilizationRatio utilization;
};

std::vector<UtilizationTableRow> utilization_table(Signedness signedness,
                                                   std::uint64_t max_elements);

} // namespace bitchrom
