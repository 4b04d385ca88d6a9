#include "bitchrom/differential.hpp"

#include <fmt/format.h>

namespace bitchrom {

namespace {

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
    std::string out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

std::vector<std::uint8_t> random_bits(std::uint64_t length, std::mt19937_64& rng) {
    std::vector<std::uint8_t> bits(length);
    for (auto& b : bits) {
        b = static_cast<std::uint8_t>(rng() & 1);
    }
    return bits;
}

} // namespace

DifferentialHarness::DifferentialHarness(const LayoutSpec& layout, std::uint64_t length,
                                         std::uint64_t seed)
    : layout_(layout), rng_(seed) {
    for (int i = 0; i < 2; ++i) {
        const auto bits = random_bits(length, rng_);
        packed_.push_back(PackedChromosome::pack(bits, layout_));
        naive_.push_back(NaiveChromosome::pack(bits));
    }
}

std::optional<DivergenceRecord> DifferentialHarness::check(std::string_view operation) {
    for (std::size_t i = 0; i < packed_.size(); ++i) {
        const auto packed_bits = packed_[i].unpack();
        const auto naive_bits = naive_[i].unpack();
        if (packed_bits != naive_bits) {
            return DivergenceRecord{steps_, std::string(operation),
                                    fmt::format("c{} bits={}", i, bits_to_string(packed_bits)),
                                    fmt::format("c{} bits={}", i, bits_to_string(naive_bits))};
        }
        const auto packed_ones = packed_[i].ones_count();
        const auto naive_ones = naive_[i].ones_count();
        if (packed_ones != naive_ones) {
            return DivergenceRecord{steps_, std::string(operation),
                                    fmt::format("c{} ones={}", i, packed_ones),
                                    fmt::format("c{} ones={}", i, naive_ones)};
        }
    }
    return std::nullopt;
}

std::optional<DivergenceRecord> DifferentialHarness::step() {
    const std::uint64_t length = naive_[0].length();
    std::uniform_int_distribution<int> percent(0, 99);
    std::uniform_int_distribution<std::uint64_t> allele(0, length - 1);
    std::uniform_int_distribution<int> coin(0, 1);

    const int roll = percent(rng_);
    const std::uint64_t k = allele(rng_);
    const std::size_t target = static_cast<std::size_t>(coin(rng_));
    ++steps_;

    if (roll < 40) { // set
        const bool v = coin(rng_) != 0;
        packed_[target].set(k, v);
        naive_[target].set(k, v);
        return check(fmt::format("set(c{}, k={}, v={})", target, k, v ? 1 : 0));
    }
    if (roll < 70) { // get
        const bool pv = packed_[target].get(k);
        const bool nv = naive_[target].get(k);
        if (pv != nv) {
            return DivergenceRecord{steps_, fmt::format("get(c{}, k={})", target, k),
                                    fmt::format("{}", pv ? 1 : 0),
                                    fmt::format("{}", nv ? 1 : 0)};
        }
        return std::nullopt;
    }
    if (roll < 90) { // flip
        packed_[target].flip(k);
        naive_[target].flip(k);
        return check(fmt::format("flip(c{}, k={})", target, k));
    }
    // prefix exchange between the pair
    exchange_prefix(packed_[0], packed_[1], k);
    exchange_prefix(naive_[0], naive_[1], k);
    return check(fmt::format("exchange_prefix(k={})", k));
}

void DifferentialHarness::inject_packed_flip(std::size_t which, std::uint64_t k) {
    packed_[which].flip(k);
}

DifferentialResult differential_run(const LayoutSpec& layout, std::uint64_t length,
                                    std::uint64_t steps, std::uint64_t seed) {
    DifferentialHarness harness(layout, length, seed);
    DifferentialResult result;
    if (auto d = harness.check("construction")) {
        result.equivalent = false;
        result.divergence = std::move(d);
        return result;
    }
    for (std::uint64_t i = 0; i < steps; ++i) {
        if (auto d = harness.step()) {
            result.equivalent = false;
            result.divergence = std::move(d);
            break;
        }
    }
    result.steps_executed = harness.steps_executed();
    return result;
}

} // namespace bitchrom
