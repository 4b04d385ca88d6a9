#include "bitchrom/ga.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace bitchrom {

void validate(const GAConfig& cfg) {
    if (cfg.population_size < 2 || cfg.population_size % 2 != 0) {
        throw ConfigurationError(fmt::format(
            "population_size must be even and at least 2 (got {})", cfg.population_size));
    }
    if (!(cfg.crossover_probability >= 0.0 && cfg.crossover_probability <= 1.0)) {
        throw ConfigurationError(fmt::format("crossover_probability must be in [0, 1] (got {})",
                                             cfg.crossover_probability));
    }
    if (!(cfg.mutation_probability >= 0.0 && cfg.mutation_probability <= 1.0)) {
        throw ConfigurationError(fmt::format("mutation_probability must be in [0, 1] (got {})",
                                             cfg.mutation_probability));
    }
    if (cfg.chromosome_length == 0) {
        throw ConfigurationError("chromosome_length must be at least 1");
    }
    if (cfg.chromosome_length > cfg.layout.metadata_cap()) {
        throw ConfigurationError(fmt::format(
            "chromosome_length {} exceeds the metadata capacity {} of a {}-bit {} element",
            cfg.chromosome_length, cfg.layout.metadata_cap(), cfg.layout.element_width(),
            to_string(cfg.layout.signedness())));
    }
    if (cfg.selection.method == SelectionMethod::Tournament && cfg.selection.tournament_size < 2) {
        throw ConfigurationError(fmt::format("tournament_size must be at least 2 (got {})",
                                             cfg.selection.tournament_size));
    }
    if (cfg.elitism_count >= cfg.population_size) {
        throw ConfigurationError(fmt::format(
            "elitism_count must be less than population_size (got {} with population_size {})",
            cfg.elitism_count, cfg.population_size));
    }
    if (cfg.max_generations == 0) {
        throw ConfigurationError("max_generations must be at least 1");
    }
}

double onemax_fitness(const PackedChromosome& c) {
    return static_cast<double>(c.ones_count());
}

std::size_t Population::best_index() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (members[i].fitness > members[best].fitness) {
            best = i;
        }
    }
    return best;
}

double Population::total_fitness() const {
    return std::accumulate(members.begin(), members.end(), 0.0,
                           [](double acc, const Individual& m) { return acc + m.fitness; });
}

double Population::mean_fitness() const {
    return members.empty() ? 0.0 : total_fitness() / static_cast<double>(members.size());
}

Population initialize_population(const GAConfig& cfg, const FitnessFunction& fitness,
                                 std::mt19937_64& rng) {
    validate(cfg);
    Population pop;
    pop.members.reserve(cfg.population_size);
    for (std::size_t i = 0; i < cfg.population_size; ++i) {
        PackedChromosome c = PackedChromosome::random(cfg.chromosome_length, cfg.layout, rng);
        const double f = fitness(c);
        pop.members.push_back(Individual{std::move(c), f});
    }
    return pop;
}

std::size_t select_index(const Population& pop, const SelectionSpec& selection,
                         std::mt19937_64& rng) {
    const std::size_t n = pop.members.size();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);

    if (selection.method == SelectionMethod::Tournament) {
        // Contestants are drawn without replacement, so a tournament over
        // the whole population is exactly argmax. Ties go to the earlier
        // draw, which keeps uniform-fitness selection uniform.
        const std::size_t t = std::min<std::size_t>(selection.tournament_size, n);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::size_t best = order.size(); // sentinel
        for (std::size_t i = 0; i < t; ++i) {
            std::uniform_int_distribution<std::size_t> remaining(i, n - 1);
            std::swap(order[i], order[remaining(rng)]);
            const std::size_t candidate = order[i];
            if (best == order.size() ||
                pop.members[candidate].fitness > pop.members[best].fitness) {
                best = candidate;
            }
        }
        return best;
    }

    const double total = pop.total_fitness();
    if (total <= 0.0) {
        if (selection.roulette_fallback_uniform) {
            return pick(rng);
        }
        throw DegenerateFitnessError(
            "total population fitness is zero; roulette-wheel selection is undefined");
    }
    std::uniform_real_distribution<double> spin(0.0, total);
    const double target = spin(rng);
    double cumulative = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cumulative += pop.members[i].fitness;
        if (cumulative > target) {
            return i;
        }
    }
    return n - 1; // guard against accumulated rounding
}

std::pair<std::size_t, std::size_t> select_pair_indices(const Population& pop,
                                                        const SelectionSpec& selection,
                                                        std::mt19937_64& rng) {
    const std::size_t first = select_index(pop, selection, rng);
    const std::size_t second = select_index(pop, selection, rng);
    return {first, second};
}

std::pair<PackedChromosome, PackedChromosome> select_pair(const Population& pop,
                                                          const SelectionSpec& selection,
                                                          std::mt19937_64& rng) {
    const auto [i, j] = select_pair_indices(pop, selection, rng);
    return {pop.members[i].chromosome, pop.members[j].chromosome};
}

void crossover(PackedChromosome& c1, PackedChromosome& c2, double pc, std::mt19937_64& rng) {
    if (c1.layout() != c2.layout() || c1.length() != c2.length()) {
        throw IncompatibleChromosomeError("crossover requires identical layout and length");
    }
    if (!std::bernoulli_distribution(pc)(rng)) {
        return;
    }
    std::uniform_int_distribution<std::uint64_t> cut(0, c1.length() - 1);
    exchange_prefix(c1, c2, cut(rng));
}

void mutate(PackedChromosome& c, double pm, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(pm);
    const std::uint64_t length = c.length();
    for (std::uint64_t k = 0; k < length; ++k) {
        if (coin(rng)) {
            c.flip(k);
        }
    }
}

Population next_generation(const Population& pop, const GAConfig& cfg,
                           const FitnessFunction& fitness, std::mt19937_64& rng) {
    std::vector<Individual> children;
    children.reserve(cfg.population_size);
    for (std::size_t pair = 0; pair < cfg.population_size / 2; ++pair) {
        auto [c1, c2] = select_pair(pop, cfg.selection, rng);
        crossover(c1, c2, cfg.crossover_probability, rng);
        mutate(c1, cfg.mutation_probability, rng);
        mutate(c2, cfg.mutation_probability, rng);
        const double f1 = fitness(c1);
        const double f2 = fitness(c2);
        children.push_back(Individual{std::move(c1), f1});
        children.push_back(Individual{std::move(c2), f2});
    }

    if (cfg.elitism_count > 0) {
        // Best parents replace the worst offspring, ties broken by index.
        std::vector<std::size_t> parent_order(pop.members.size());
        std::iota(parent_order.begin(), parent_order.end(), 0);
        std::stable_sort(parent_order.begin(), parent_order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return pop.members[a].fitness > pop.members[b].fitness;
                         });
        std::vector<std::size_t> child_order(children.size());
        std::iota(child_order.begin(), child_order.end(), 0);
        std::stable_sort(child_order.begin(), child_order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return children[a].fitness < children[b].fitness;
                         });
        for (std::size_t e = 0; e < cfg.elitism_count; ++e) {
            children[child_order[e]] = pop.members[parent_order[e]];
        }
    }

    return Population{pop.generation + 1, std::move(children)};
}

GAResult run_ga(const GAConfig& cfg, const FitnessFunction& fitness) {
    validate(cfg);
    std::mt19937_64 rng(cfg.seed);

    Population pop = initialize_population(cfg, fitness, rng);
    std::vector<GenerationStats> history;
    history.push_back({pop.generation, pop.members[pop.best_index()].fitness,
                       pop.mean_fitness()});
    Individual best = pop.members[pop.best_index()];

    const auto target_reached = [&] {
        return cfg.target_fitness && best.fitness >= *cfg.target_fitness;
    };
    while (pop.generation < cfg.max_generations && !target_reached()) {
        pop = next_generation(pop, cfg, fitness, rng);
        const Individual& generation_best = pop.members[pop.best_index()];
        if (generation_best.fitness > best.fitness) {
            best = generation_best;
        }
        history.push_back({pop.generation, generation_best.fitness, pop.mean_fitness()});
    }

    return GAResult{std::move(best), std::move(history)};
}

} // namespace bitchrom
