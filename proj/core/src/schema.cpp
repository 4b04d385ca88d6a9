#include "bitchrom/schema.hpp"

#include <cmath>

#include <fmt/format.h>

namespace bitchrom {

Schema::Schema(std::string pattern) : pattern_(std::move(pattern)) {
    std::size_t first_fixed = std::string::npos;
    std::size_t last_fixed = 0;
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
        if (pattern_[i] != '*') {
            ++order_;
            if (first_fixed == std::string::npos) {
                first_fixed = i;
            }
            last_fixed = i;
        }
    }
    defining_length_ = order_ <= 1 ? 0 : last_fixed - first_fixed;
}

Schema Schema::parse(std::string_view pattern) {
    if (pattern.empty()) {
        throw InvalidLengthError("schema pattern must not be empty");
    }
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const char c = pattern[i];
        if (c != '0' && c != '1' && c != '*') {
            throw ConfigurationError(fmt::format(
                "schema pattern may contain only '0', '1', '*' (found '{}' at position {})", c, i));
        }
    }
    return Schema(std::string(pattern));
}

bool Schema::matches(std::span<const std::uint8_t> bits) const {
    if (bits.size() != pattern_.size()) {
        throw IncompatibleSchemaError(fmt::format(
            "schema length {} does not match chromosome length {}", pattern_.size(), bits.size()));
    }
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
        if (pattern_[i] == '*') {
            continue;
        }
        if ((pattern_[i] == '1') != (bits[i] != 0)) {
            return false;
        }
    }
    return true;
}

bool Schema::matches(const PackedChromosome& c) const {
    if (c.length() != pattern_.size()) {
        throw IncompatibleSchemaError(fmt::format(
            "schema length {} does not match chromosome length {}", pattern_.size(), c.length()));
    }
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
        if (pattern_[i] == '*') {
            continue;
        }
        if ((pattern_[i] == '1') != c.get(i)) {
            return false;
        }
    }
    return true;
}

boost::multiprecision::cpp_int max_schemata_count(std::uint64_t cardinality,
                                                  std::uint64_t length) {
    boost::multiprecision::cpp_int result = 1;
    const boost::multiprecision::cpp_int base = cardinality + 1;
    for (std::uint64_t i = 0; i < length; ++i) {
        result *= base;
    }
    return result;
}

double disruption_probability(const Schema& s, std::uint64_t length, double pc) {
    if (length < 2) {
        throw InvalidLengthError(
            fmt::format("chromosome length must be at least 2 (got {})", length));
    }
    if (s.defining_length() > length - 1) {
        throw IncompatibleSchemaError(
            fmt::format("defining length {} exceeds chromosome length {} minus 1",
                        s.defining_length(), length));
    }
    if (!(pc >= 0.0 && pc <= 1.0)) {
        throw ConfigurationError(fmt::format("crossover_probability must be in [0, 1] (got {})", pc));
    }
    return static_cast<double>(s.defining_length()) / static_cast<double>(length - 1) * pc;
}

double expected_schema_count(const Schema& s, const SchemaTheoremInputs& in) {
    if (s.length() != in.chromosome_length) {
        throw IncompatibleSchemaError(
            fmt::format("schema length {} does not match chromosome length {}", s.length(),
                        in.chromosome_length));
    }
    if (!(in.mutation_probability >= 0.0 && in.mutation_probability <= 1.0)) {
        throw ConfigurationError(fmt::format("mutation_probability must be in [0, 1] (got {})",
                                             in.mutation_probability));
    }
    if (in.population_avg_fitness == 0.0) {
        throw DegenerateFitnessError("population average fitness is zero");
    }
    const double selection =
        in.count_now * (in.schema_avg_fitness / in.population_avg_fitness);
    const double crossover_survival =
        1.0 - disruption_probability(s, in.chromosome_length, in.crossover_probability);
    const double mutation_survival =
        std::pow(1.0 - in.mutation_probability, static_cast<double>(s.order()));
    return selection * crossover_survival * mutation_survival;
}

std::size_t count_matching(const Population& pop, const Schema& s) {
    std::size_t count = 0;
    for (const Individual& member : pop.members) {
        if (s.matches(member.chromosome)) {
            ++count;
        }
    }
    return count;
}

} // namespace bitchrom
