#include "bitchrom/naive_chromosome.hpp"

#include <algorithm>
#include <utility>

#include <fmt/format.h>

namespace bitchrom {

NaiveChromosome NaiveChromosome::zero(std::uint64_t length) {
    if (length == 0) {
        throw InvalidLengthError("chromosome length must be at least 1");
    }
    return NaiveChromosome(std::vector<std::uint8_t>(length, 0));
}

NaiveChromosome NaiveChromosome::random(std::uint64_t length, std::mt19937_64& rng) {
    NaiveChromosome c = zero(length);
    for (auto& allele : c.alleles_) {
        allele = static_cast<std::uint8_t>(rng() & 1);
    }
    return c;
}

NaiveChromosome NaiveChromosome::pack(std::span<const std::uint8_t> bits) {
    NaiveChromosome c = zero(bits.size());
    std::transform(bits.begin(), bits.end(), c.alleles_.begin(),
                   [](std::uint8_t b) { return b != 0 ? std::uint8_t{1} : std::uint8_t{0}; });
    return c;
}

bool NaiveChromosome::get(std::uint64_t k) const {
    if (k >= length()) {
        throw IndexOutOfRangeError(
            fmt::format("allele index {} out of range for length {}", k, length()));
    }
    return alleles_[k] != 0;
}

void NaiveChromosome::set(std::uint64_t k, bool value) {
    if (k >= length()) {
        throw IndexOutOfRangeError(
            fmt::format("allele index {} out of range for length {}", k, length()));
    }
    alleles_[k] = value ? 1 : 0;
}

void NaiveChromosome::flip(std::uint64_t k) {
    if (k >= length()) {
        throw IndexOutOfRangeError(
            fmt::format("allele index {} out of range for length {}", k, length()));
    }
    alleles_[k] ^= 1;
}

std::uint64_t NaiveChromosome::ones_count() const {
    return static_cast<std::uint64_t>(std::count(alleles_.begin(), alleles_.end(), 1));
}

void exchange_prefix(NaiveChromosome& a, NaiveChromosome& b, std::uint64_t cut) {
    if (a.length() != b.length()) {
        throw IncompatibleChromosomeError(fmt::format(
            "cannot exchange between chromosomes of length {} and {}", a.length(), b.length()));
    }
    if (cut >= a.length()) {
        throw IndexOutOfRangeError(
            fmt::format("cut index {} out of range for length {}", cut, a.length()));
    }
    for (std::uint64_t k = 0; k <= cut; ++k) {
        std::swap(a.alleles_[k], b.alleles_[k]);
    }
}

} // namespace bitchrom
