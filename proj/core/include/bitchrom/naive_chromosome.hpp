#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bitchrom/error.hpp"

namespace bitchrom {

/// One-byte-per-allele binary chromosome: the baseline representation and
/// the differential oracle for PackedChromosome. Same operation surface,
/// no layout or metadata element.
class NaiveChromosome {
public:
    static NaiveChromosome zero(std::uint64_t length);
    static NaiveChromosome random(std::uint64_t length, std::mt19937_64& rng);
    static NaiveChromosome pack(std::span<const std::uint8_t> bits);

    std::vector<std::uint8_t> unpack() const { return alleles_; }

    std::uint64_t length() const { return alleles_.size(); }
    bool get(std::uint64_t k) const;
    void set(std::uint64_t k, bool value);
    void flip(std::uint64_t k);
    std::uint64_t ones_count() const;

    friend void exchange_prefix(NaiveChromosome& a, NaiveChromosome& b, std::uint64_t cut);

    bool operator==(const NaiveChromosome&) const = default;

private:
    explicit NaiveChromosome(std::vector<std::uint8_t> alleles) : alleles_(std::move(alleles)) {}

    std::vector<std::uint8_t> alleles_; // each entry 0 or 1
};

void exchange_prefix(NaiveChromosome& a, NaiveChromosome& b, std::uint64_t cut);

} // namespace bitchrom
