#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "bitchrom/packed_chromosome.hpp"

namespace bitchrom {

enum class SelectionMethod { Tournament, RouletteWheel };

struct SelectionSpec {
    SelectionMethod method = SelectionMethod::Tournament;
    unsigned tournament_size = 2;
    /// When total fitness is zero, fall back to uniform selection instead
    /// of throwing DegenerateFitnessError. Roulette wheel only.
    bool roulette_fallback_uniform = false;
};

struct GAConfig {
    std::size_t population_size = 100; // even, >= 2
    double crossover_probability = 0.9;
    double mutation_probability = 0.0078125; // per allele
    std::uint64_t chromosome_length = 128;
    LayoutSpec layout;
    SelectionSpec selection;
    std::size_t elitism_count = 0; // best individuals copied unchanged
    std::uint64_t max_generations = 300;
    std::optional<double> target_fitness;
    std::uint64_t seed = 0;
};

/// Throws ConfigurationError naming the offending field.
void validate(const GAConfig& cfg);

/// Must be pure: same chromosome, same non-negative score.
using FitnessFunction = std::function<double(const PackedChromosome&)>;

/// Count of 1-alleles.
double onemax_fitness(const PackedChromosome& c);

struct Individual {
    PackedChromosome chromosome;
    double fitness;
};

struct Population {
    std::uint64_t generation = 0;
    std::vector<Individual> members;

    std::size_t best_index() const;
    double mean_fitness() const;
    double total_fitness() const;
};

Population initialize_population(const GAConfig& cfg, const FitnessFunction& fitness,
                                 std::mt19937_64& rng);

/// One parent index. Tournament: best of t contestants drawn without
/// replacement (a tournament of the whole population is argmax).
/// Roulette wheel: probability proportional to fitness.
std::size_t select_index(const Population& pop, const SelectionSpec& selection,
                         std::mt19937_64& rng);

std::pair<std::size_t, std::size_t> select_pair_indices(const Population& pop,
                                                        const SelectionSpec& selection,
                                                        std::mt19937_64& rng);

/// Two independently selected parents, as copies.
std::pair<PackedChromosome, PackedChromosome> select_pair(const Population& pop,
                                                          const SelectionSpec& selection,
                                                          std::mt19937_64& rng);

/// With probability pc, one-point crossover in place: a cut allele index is
/// drawn uniformly over [0, L) and the prefixes up to it are exchanged.
/// Otherwise both chromosomes are left unchanged.
void crossover(PackedChromosome& c1, PackedChromosome& c2, double pc, std::mt19937_64& rng);

/// Flips each allele independently with probability pm.
void mutate(PackedChromosome& c, double pm, std::mt19937_64& rng);

/// Breeds the next generation: population_size/2 selected pairs, crossover,
/// mutation of both children; with elitism, the best parents replace the
/// worst offspring.
Population next_generation(const Population& pop, const GAConfig& cfg,
                           const FitnessFunction& fitness, std::mt19937_64& rng);

struct GenerationStats {
    std::uint64_t generation;
    double best_fitness;
    double mean_fitness;
};

struct GAResult {
    Individual best; // highest fitness ever observed
    std::vector<GenerationStats> history;
};

/// Runs the generational loop until max_generations or target_fitness.
/// Pure function of (cfg, fitness): identical seeds give identical results.
GAResult run_ga(const GAConfig& cfg, const FitnessFunction& fitness);

} // namespace bitchrom
