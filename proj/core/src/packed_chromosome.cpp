#include "bitchrom/packed_chromosome.hpp"

#include <bit>
#include <utility>

#include <fmt/format.h>

namespace bitchrom {

namespace {

std::uint64_t low_bits(unsigned count) {
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

} // namespace

PackedChromosome PackedChromosome::zero(std::uint64_t length, const LayoutSpec& layout) {
    if (length == 0) {
        throw InvalidLengthError("chromosome length must be at least 1");
    }
    if (length > layout.metadata_cap()) {
        throw CapacityExceededError(
            fmt::format("length {} exceeds the metadata capacity {} of a {}-bit {} element",
                        length, layout.metadata_cap(), layout.element_width(),
                        to_string(layout.signedness())));
    }
    std::vector<std::uint64_t> elements(calculate_array_dim(length, layout), 0);
    elements[0] = length;
    return PackedChromosome(layout, std::move(elements));
}

PackedChromosome PackedChromosome::random(std::uint64_t length, const LayoutSpec& layout,
                                          std::mt19937_64& rng) {
    PackedChromosome c = zero(length, layout);
    const unsigned n = layout.usable_bits();
    const auto offset = static_cast<unsigned>(padding_offset(length, layout));
    const std::uint64_t mask_first = low_bits(n - offset); // `offset` leading zeros
    const std::uint64_t mask_other = layout.usable_mask();
    for (std::uint64_t i = 1; i < c.elements_.size(); ++i) {
        c.elements_[i] = rng() & (i == 1 ? mask_first : mask_other);
    }
    return c;
}

PackedChromosome PackedChromosome::pack(std::span<const std::uint8_t> bits,
                                        const LayoutSpec& layout) {
    PackedChromosome c = zero(bits.size(), layout);
    for (std::uint64_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != 0) {
            c.set(k, true);
        }
    }
    return c;
}

std::vector<std::uint8_t> PackedChromosome::unpack() const {
    std::vector<std::uint8_t> bits(length());
    for (std::uint64_t k = 0; k < bits.size(); ++k) {
        bits[k] = get(k) ? 1 : 0;
    }
    return bits;
}

BitAddress PackedChromosome::address_of(std::uint64_t k) const {
    if (k >= length()) {
        throw IndexOutOfRangeError(
            fmt::format("allele index {} out of range for length {}", k, length()));
    }
    const std::uint64_t n = layout_.usable_bits();
    const std::uint64_t g = padding_offset(length(), layout_) + k;
    return BitAddress{g / n + 1, static_cast<unsigned>(g % n)};
}

bool PackedChromosome::get(std::uint64_t k) const {
    const BitAddress a = address_of(k);
    return (elements_[a.element_index] >> word_bit(a.usable_offset)) & 1;
}

void PackedChromosome::set(std::uint64_t k, bool value) {
    const BitAddress a = address_of(k);
    const std::uint64_t mask = std::uint64_t{1} << word_bit(a.usable_offset);
    if (value) {
        elements_[a.element_index] |= mask;
    } else {
        elements_[a.element_index] &= ~mask;
    }
}

void PackedChromosome::flip(std::uint64_t k) {
    const BitAddress a = address_of(k);
    elements_[a.element_index] ^= std::uint64_t{1} << word_bit(a.usable_offset);
}

std::uint64_t PackedChromosome::ones_count() const {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i < elements_.size(); ++i) {
        count += static_cast<std::uint64_t>(std::popcount(elements_[i]));
    }
    return count;
}

void exchange_prefix(PackedChromosome& a, PackedChromosome& b, std::uint64_t cut) {
    if (a.layout_ != b.layout_ || a.length() != b.length()) {
        throw IncompatibleChromosomeError(fmt::format(
            "cannot exchange between a {}-allele {}-bit {} chromosome and a {}-allele {}-bit {} one",
            a.length(), a.layout_.element_width(), to_string(a.layout_.signedness()),
            b.length(), b.layout_.element_width(), to_string(b.layout_.signedness())));
    }
    if (cut >= a.length()) {
        throw IndexOutOfRangeError(
            fmt::format("cut index {} out of range for length {}", cut, a.length()));
    }
    const unsigned n = a.layout_.usable_bits();
    // Global usable-bit position of the last swapped allele; everything in
    // front of it (padding included, zero on both sides) swaps too.
    const std::uint64_t end = padding_offset(a.length(), a.layout_) + cut;
    const std::uint64_t boundary = end / n + 1;
    for (std::uint64_t i = 1; i < boundary; ++i) {
        std::swap(a.elements_[i], b.elements_[i]);
    }
    const auto b_off = static_cast<unsigned>(end % n);
    const std::uint64_t mask = low_bits(b_off + 1) << (n - 1 - b_off);
    const std::uint64_t diff = (a.elements_[boundary] ^ b.elements_[boundary]) & mask;
    a.elements_[boundary] ^= diff;
    b.elements_[boundary] ^= diff;
}

} // namespace bitchrom
