#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bitchrom/layout.hpp"

namespace bitchrom {

/// Location of one allele inside the element array. Element 0 holds the
/// metadata, so element_index >= 1 always. usable_offset counts from the
/// most significant usable bit of the element, i.e. alleles read left to
/// right across the array.
struct BitAddress {
    std::uint64_t element_index;
    unsigned usable_offset;

    bool operator==(const BitAddress&) const = default;
};

/// Bit-packed binary chromosome.
///
/// elements()[0] stores the allele count L; the remaining 1 + ceil(L/n)
/// elements carry one allele per usable bit. Allele k sits at global
/// usable-bit position padding_offset(L) + k, which places all padding in
/// the high usable bits of elements()[1] and leaves the last element fully
/// occupied. Invariant behind operator==: every non-allele bit (padding,
/// and each word's MSB for signed layouts) stays zero, so equal allele
/// sequences mean word-for-word equal element arrays.
class PackedChromosome {
public:
    static PackedChromosome zero(std::uint64_t length, const LayoutSpec& layout);
    /// Each allele independently uniform over {0,1}: data elements are
    /// masked random words, the first one additionally masked so the
    /// padding bits stay zero.
    static PackedChromosome random(std::uint64_t length, const LayoutSpec& layout,
                                   std::mt19937_64& rng);
    /// Builds from a bit sequence, allele 0 first. Nonzero bytes read as 1.
    static PackedChromosome pack(std::span<const std::uint8_t> bits, const LayoutSpec& layout);

    std::vector<std::uint8_t> unpack() const;

    std::uint64_t length() const { return elements_[0]; }
    const LayoutSpec& layout() const { return layout_; }
    std::uint64_t element_count() const { return elements_.size(); }
    std::span<const std::uint64_t> elements() const { return elements_; }

    BitAddress address_of(std::uint64_t k) const;
    bool get(std::uint64_t k) const;
    void set(std::uint64_t k, bool value);
    void flip(std::uint64_t k);

    /// Number of 1-alleles (popcount of the data elements).
    std::uint64_t ones_count() const;

    /// Swaps alleles 0..cut inclusive between a and b. Metadata and the
    /// suffix stay put. Requires identical layout and length.
    friend void exchange_prefix(PackedChromosome& a, PackedChromosome& b, std::uint64_t cut);

    bool operator==(const PackedChromosome&) const = default;

private:
    PackedChromosome(const LayoutSpec& layout, std::vector<std::uint64_t> elements)
        : layout_(layout), elements_(std::move(elements)) {}

    unsigned word_bit(unsigned usable_offset) const {
        return layout_.usable_bits() - 1 - usable_offset;
    }

    LayoutSpec layout_;
    std::vector<std::uint64_t> elements_;
};

void exchange_prefix(PackedChromosome& a, PackedChromosome& b, std::uint64_t cut);

} // namespace bitchrom
