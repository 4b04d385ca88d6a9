#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitchrom/naive_chromosome.hpp"
#include "bitchrom/packed_chromosome.hpp"

namespace bitchrom {

/// First observation on which the two representations disagreed.
struct DivergenceRecord {
    std::uint64_t step = 0; // 0 = post-construction check
    std::string operation;
    std::string packed_observation;
    std::string naive_observation;
};

struct DifferentialResult {
    bool equivalent = true;
    std::uint64_t steps_executed = 0;
    std::optional<DivergenceRecord> divergence;
};

/// Drives an identical random operation stream over a packed chromosome
/// pair and a naive chromosome pair built from the same bit sequences,
/// comparing every observation (get results, unpacked bits, ones counts)
/// after each step. Op mix: 40% set, 30% get, 20% flip, 10% prefix
/// exchange.
class DifferentialHarness {
public:
    DifferentialHarness(const LayoutSpec& layout, std::uint64_t length, std::uint64_t seed);

    /// Executes one random operation on both representations; returns the
    /// divergence if any observation disagreed.
    std::optional<DivergenceRecord> step();

    /// Full observation comparison without executing an operation.
    std::optional<DivergenceRecord> check(std::string_view operation = "check");

    /// Flips allele k of one packed chromosome only, leaving its naive
    /// twin untouched. Sensitivity hook: the next check must diverge.
    void inject_packed_flip(std::size_t which, std::uint64_t k);

    std::uint64_t steps_executed() const { return steps_; }

private:
    LayoutSpec layout_;
    std::mt19937_64 rng_;
    std::vector<PackedChromosome> packed_;
    std::vector<NaiveChromosome> naive_;
    std::uint64_t steps_ = 0;
};

/// Convenience wrapper: construct, check, run `steps` operations, stop at
/// the first divergence.
DifferentialResult differential_run(const LayoutSpec& layout, std::uint64_t length,
                                    std::uint64_t steps, std::uint64_t seed);

} // namespace bitchrom
