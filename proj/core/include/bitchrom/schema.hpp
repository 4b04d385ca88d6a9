#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "bitchrom/ga.hpp"
#include "bitchrom/packed_chromosome.hpp"

namespace bitchrom {

/// Template over {0, 1, *} identifying a subset of chromosomes; '*' is the
/// don't-care symbol. Order = number of fixed positions; defining length =
/// distance between the first and last fixed positions (0 when order <= 1).
class Schema {
public:
    static Schema parse(std::string_view pattern);

    const std::string& pattern() const { return pattern_; }
    std::uint64_t length() const { return pattern_.size(); }
    std::uint64_t order() const { return order_; }
    std::uint64_t defining_length() const { return defining_length_; }

    bool matches(std::span<const std::uint8_t> bits) const;
    bool matches(const PackedChromosome& c) const;

private:
    explicit Schema(std::string pattern);

    std::string pattern_;
    std::uint64_t order_ = 0;
    std::uint64_t defining_length_ = 0;
};

/// Observed quantities feeding the expected-count formula.
struct SchemaTheoremInputs {
    double count_now;              // matching chromosomes at the current generation
    double schema_avg_fitness;     // observed mean fitness of those chromosomes
    double population_avg_fitness; // observed mean fitness of the population
    std::uint64_t chromosome_length;
    double crossover_probability;
    double mutation_probability; // per allele
};

/// Number of distinct schemata over an alphabet of the given cardinality:
/// (k + 1)^L, exact.
boost::multiprecision::cpp_int max_schemata_count(std::uint64_t cardinality,
                                                  std::uint64_t length);

/// Probability that one-point crossover cuts inside the schema's defining
/// region: (delta / (L - 1)) * pc.
double disruption_probability(const Schema& s, std::uint64_t length, double pc);

/// Expected number of schema members in the next generation:
/// m * (f_schema / f_pop) * (1 - (delta/(L-1)) * pc) * (1 - pm)^order.
double expected_schema_count(const Schema& s, const SchemaTheoremInputs& in);

/// Members whose alleles equal the schema at every fixed position.
std::size_t count_matching(const Population& pop, const Schema& s);

} // namespace bitchrom
