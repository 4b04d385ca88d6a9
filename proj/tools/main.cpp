#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <bitchrom/bitchrom.hpp>

#include "output.hpp"

using nlohmann::json;
using namespace bitchrom;
using cli::OutputOptions;

namespace {

constexpr const char* kTablesNote =
    "array capacity counts the usable bits of the max_elements-1 allele elements; "
    "element 0 is reserved for the length metadata";

std::string bits_string(const std::vector<std::uint8_t>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

json layout_json(const LayoutSpec& layout) {
    return json{{"width", layout.element_width()},
                {"signedness", to_string(layout.signedness())}};
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

json run_config_json(const GAConfig& cfg) {
    json j{{"length", cfg.chromosome_length},
           {"population_size", cfg.population_size},
           {"crossover_probability", cfg.crossover_probability},
           {"mutation_probability", cfg.mutation_probability},
           {"max_generations", cfg.max_generations},
           {"seed", cfg.seed},
           {"width", cfg.layout.element_width()},
           {"signedness", to_string(cfg.layout.signedness())},
           {"selection", cfg.selection.method == SelectionMethod::Tournament ? "tournament"
                                                                             : "roulette"},
           {"tournament_size", cfg.selection.tournament_size},
           {"elitism_count", cfg.elitism_count},
           {"roulette_fallback_uniform", cfg.selection.roulette_fallback_uniform}};
    if (cfg.target_fitness) {
        j["target_fitness"] = *cfg.target_fitness;
    } else {
        j["target_fitness"] = nullptr;
    }
    return j;
}

int cmd_run(const GAConfig& cfg, const OutputOptions& out) {
    const GAResult result = run_ga(cfg, onemax_fitness);
    const std::string best_bits = bits_string(result.best.chromosome.unpack());

    if (out.format == "json") {
        json j{{"command", "run"},
               {"config", run_config_json(cfg)},
               {"generations_run", result.history.back().generation},
               {"best", json{{"fitness", result.best.fitness},
                             {"bits", best_bits},
                             {"length", result.best.chromosome.length()}}}};
        json history = json::array();
        for (const GenerationStats& s : result.history) {
            history.push_back(json{{"generation", s.generation},
                                   {"best_fitness", s.best_fitness},
                                   {"mean_fitness", s.mean_fitness}});
        }
        j["history"] = std::move(history);
        cli::write_output(j.dump(2) + "\n", out);
        return 0;
    }

    if (out.format == "csv") {
        std::string csv = "generation,best_fitness,mean_fitness\n";
        for (const GenerationStats& s : result.history) {
            csv += fmt::format("{},{},{}\n", s.generation, s.best_fitness, s.mean_fitness);
        }
        cli::write_output(csv, out);
        return 0;
    }

    std::string text = fmt::format(
        "onemax run: length={} pop={} pc={} pm={} gens={} seed={} layout={}-bit {} "
        "selection={} elitism={}\n\n",
        cfg.chromosome_length, cfg.population_size, cfg.crossover_probability,
        cfg.mutation_probability, cfg.max_generations, cfg.seed, cfg.layout.element_width(),
        to_string(cfg.layout.signedness()),
        cfg.selection.method == SelectionMethod::Tournament
            ? fmt::format("tournament({})", cfg.selection.tournament_size)
            : "roulette",
        cfg.elitism_count);
    text += fmt::format("{:<12}{:<16}{}\n", "generation", "best_fitness", "mean_fitness");
    for (const GenerationStats& s : result.history) {
        text += fmt::format("{:<12}{:<16}{}\n", s.generation, s.best_fitness, s.mean_fitness);
    }
    text += fmt::format("\nbest fitness: {}\nbest individual: {}\n", result.best.fitness,
                        cli::elide_bits(best_bits));
    cli::write_output(text, out);
    return 0;
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

int cmd_tables(std::uint64_t capacity, const OutputOptions& out) {
    const auto unsigned_rows = utilization_table(Signedness::Unsigned, capacity);
    const auto signed_rows = utilization_table(Signedness::Signed, capacity);

    if (out.format == "json") {
        json rows = json::array();
        for (const auto* table : {&unsigned_rows, &signed_rows}) {
            for (const UtilizationTableRow& row : *table) {
                rows.push_back(json{{"signedness", to_string(row.signedness)},
                                    {"width", row.element_width},
                                    {"metadata_cap", row.metadata_cap},
                                    {"array_capacity_bits", row.array_capacity_bits},
                                    {"max_chromosome_length", row.max_length},
                                    {"utilization_percent",
                                     cli::truncated_percent(row.utilization).value()}});
            }
        }
        const json j{{"command", "tables"},
                     {"capacity", capacity},
                     {"rows", std::move(rows)},
                     {"note", kTablesNote}};
        cli::write_output(j.dump(2) + "\n", out);
        return 0;
    }

    if (out.format == "csv") {
        std::string csv =
            "signedness,width,metadata_cap,array_capacity_bits,max_chromosome_length,"
            "utilization_percent\n";
        for (const auto* table : {&unsigned_rows, &signed_rows}) {
            for (const UtilizationTableRow& row : *table) {
                csv += fmt::format("{},{},{},{},{},{}\n", to_string(row.signedness),
                                   row.element_width, row.metadata_cap, row.array_capacity_bits,
                                   row.max_length, cli::truncated_percent(row.utilization).str());
            }
        }
        cli::write_output(csv, out);
        return 0;
    }

    std::string text =
        fmt::format("memory utilization at maximum chromosome length (max_elements = {})\n",
                    capacity);
    for (const auto* table : {&unsigned_rows, &signed_rows}) {
        text += fmt::format("\n{} data types\n", to_string(table->front().signedness));
        text += fmt::format("{:<8}{:<24}{:<24}{:<24}{}\n", "width", "metadata max value",
                            "array capacity (bit)", "max chromosome length", "utilization");
        for (const UtilizationTableRow& row : *table) {
            text += fmt::format("{:<8}{:<24}{:<24}{:<24}{}%\n", row.element_width,
                                row.metadata_cap, row.array_capacity_bits, row.max_length,
                                cli::truncated_percent(row.utilization).str());
        }
    }
    text += fmt::format("\nnote: {}\n", kTablesNote);
    cli::write_output(text, out);
    return 0;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchOptions {
    std::uint64_t steps = 2000;
    std::uint64_t seed = 0;
    std::uint64_t capacity = 1 << 16;
    std::vector<std::uint64_t> lengths; // empty = defaults per layout
    unsigned width = 0;                 // 0 = all widths
    bool is_signed = false;
};

std::vector<std::uint64_t> default_differential_lengths(const LayoutSpec& layout) {
    const std::uint64_t n = layout.usable_bits();
    return {1, n - 1, n, n + 1, 2 * n, 37};
}

int cmd_bench(const BenchOptions& opt, const OutputOptions& out) {
    std::vector<LayoutSpec> layouts;
    if (opt.width != 0) {
        layouts.emplace_back(opt.width,
                             opt.is_signed ? Signedness::Signed : Signedness::Unsigned);
    } else {
        layouts = all_layouts();
    }

    struct MemRow {
        LayoutSpec layout;
        MemoryReport report;
    };
    struct DiffRow {
        LayoutSpec layout;
        std::uint64_t length;
        DifferentialResult result;
    };
    std::vector<MemRow> memory_rows;
    std::vector<DiffRow> diff_rows;
    std::uint64_t row_counter = 0;
    bool all_equivalent = true;

    for (const LayoutSpec& layout : layouts) {
        std::vector<std::uint64_t> memory_lengths;
        if (opt.lengths.empty()) {
            memory_lengths.push_back(max_chromosome_length(layout, opt.capacity));
            if (layout.metadata_cap() >= 1000000) {
                memory_lengths.push_back(1000000);
            }
        } else {
            memory_lengths = opt.lengths;
        }
        for (std::uint64_t length : memory_lengths) {
            if (length == 0) {
                continue;
            }
            memory_rows.push_back(MemRow{layout, memory_report(length, layout)});
        }

        std::vector<std::uint64_t> diff_lengths =
            opt.lengths.empty() ? default_differential_lengths(layout) : opt.lengths;
        for (std::uint64_t length : diff_lengths) {
            if (length == 0 || length > layout.metadata_cap()) {
                continue;
            }
            const std::uint64_t row_seed = opt.seed + 0x9E3779B97F4A7C15ull * ++row_counter;
            auto result = differential_run(layout, length, opt.steps, row_seed);
            all_equivalent = all_equivalent && result.equivalent;
            diff_rows.push_back(DiffRow{layout, length, std::move(result)});
        }
    }

    if (out.format == "json") {
        json memory = json::array();
        for (const MemRow& row : memory_rows) {
            memory.push_back(
                json{{"width", row.layout.element_width()},
                     {"signedness", to_string(row.layout.signedness())},
                     {"length", row.report.length},
                     {"naive_bytes", row.report.naive_bytes},
                     {"packed_bytes", row.report.packed_bytes},
                     {"utilization_naive_percent", 100.0 * row.report.utilization_naive},
                     {"utilization_packed_percent",
                      cli::truncated_percent(row.report.utilization_packed).value()},
                     {"ratio", row.report.ratio}});
        }
        json differential = json::array();
        for (const DiffRow& row : diff_rows) {
            json r{{"width", row.layout.element_width()},
                   {"signedness", to_string(row.layout.signedness())},
                   {"length", row.length},
                   {"steps", row.result.steps_executed},
                   {"equivalent", row.result.equivalent}};
            if (row.result.divergence) {
                r["divergence"] = json{{"step", row.result.divergence->step},
                                       {"operation", row.result.divergence->operation},
                                       {"packed", row.result.divergence->packed_observation},
                                       {"naive", row.result.divergence->naive_observation}};
            } else {
                r["divergence"] = nullptr;
            }
            differential.push_back(std::move(r));
        }
        const json j{{"command", "bench"},
                     {"seed", opt.seed},
                     {"steps_per_length", opt.steps},
                     {"memory", std::move(memory)},
                     {"differential", std::move(differential)},
                     {"all_equivalent", all_equivalent}};
        cli::write_output(j.dump(2) + "\n", out);
        return all_equivalent ? 0 : 1;
    }

    if (out.format == "csv") {
        std::string csv =
            "width,signedness,length,naive_bytes,packed_bytes,utilization_naive_percent,"
            "utilization_packed_percent,ratio\n";
        for (const MemRow& row : memory_rows) {
            csv += fmt::format("{},{},{},{},{},{},{},{}\n", row.layout.element_width(),
                               to_string(row.layout.signedness()), row.report.length,
                               row.report.naive_bytes, row.report.packed_bytes,
                               cli::truncated_percent(1, 8).str(),
                               cli::truncated_percent(row.report.utilization_packed).str(),
                               row.report.ratio);
        }
        csv += "\nwidth,signedness,length,steps,equivalent\n";
        for (const DiffRow& row : diff_rows) {
            csv += fmt::format("{},{},{},{},{}\n", row.layout.element_width(),
                               to_string(row.layout.signedness()), row.length,
                               row.result.steps_executed,
                               row.result.equivalent ? "true" : "false");
        }
        cli::write_output(csv, out);
        return all_equivalent ? 0 : 1;
    }

    std::string text = fmt::format("memory (seed {}, {} steps per differential run)\n",
                                   opt.seed, opt.steps);
    text += fmt::format("{:<8}{:<12}{:<12}{:<14}{:<14}{:<14}{:<14}{}\n", "width", "signedness",
                        "length", "naive bytes", "packed bytes", "naive util", "packed util",
                        "ratio");
    for (const MemRow& row : memory_rows) {
        text += fmt::format("{:<8}{:<12}{:<12}{:<14}{:<14}{:<14}{:<14}{:.4f}\n",
                            row.layout.element_width(), to_string(row.layout.signedness()),
                            row.report.length, row.report.naive_bytes, row.report.packed_bytes,
                            cli::truncated_percent(1, 8).str() + "%",
                            cli::truncated_percent(row.report.utilization_packed).str() + "%",
                            row.report.ratio);
    }
    text += fmt::format("\ndifferential vs naive oracle\n");
    text += fmt::format("{:<8}{:<12}{:<12}{:<12}{}\n", "width", "signedness", "length", "steps",
                        "verdict");
    for (const DiffRow& row : diff_rows) {
        text += fmt::format("{:<8}{:<12}{:<12}{:<12}{}\n", row.layout.element_width(),
                            to_string(row.layout.signedness()), row.length,
                            row.result.steps_executed,
                            row.result.equivalent ? "equivalent" : "DIVERGENT");
        if (row.result.divergence) {
            const DivergenceRecord& d = *row.result.divergence;
            text += fmt::format("  step {}: {} -> packed {} vs naive {}\n", d.step, d.operation,
                                d.packed_observation, d.naive_observation);
        }
    }
    text += fmt::format("\nverdict: {}\n", all_equivalent ? "all equivalent" : "DIVERGENCE");
    cli::write_output(text, out);
    return all_equivalent ? 0 : 1;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOptions {
    std::string pattern;
    std::uint64_t cardinality = 2;
    double count_now = 1.0;
    double schema_fitness = 1.0;
    double avg_fitness = 1.0;
    double pc = 0.0;
    double pm = 0.0;
};

int cmd_analyze(const AnalyzeOptions& opt, const OutputOptions& out) {
    const Schema schema = Schema::parse(opt.pattern);
    const SchemaTheoremInputs inputs{opt.count_now, opt.schema_fitness, opt.avg_fitness,
                                     schema.length(), opt.pc, opt.pm};
    const double disruption = disruption_probability(schema, schema.length(), opt.pc);
    const double expected = expected_schema_count(schema, inputs);
    const auto schemata = max_schemata_count(opt.cardinality, schema.length());

    if (out.format == "json") {
        const json j{{"command", "analyze"},
                     {"pattern", schema.pattern()},
                     {"length", schema.length()},
                     {"order", schema.order()},
                     {"defining_length", schema.defining_length()},
                     {"disruption_probability", disruption},
                     {"expected_schema_count", expected},
                     {"cardinality", opt.cardinality},
                     {"max_schemata_count", schemata.str()},
                     {"inputs", json{{"count_now", opt.count_now},
                                     {"schema_avg_fitness", opt.schema_fitness},
                                     {"population_avg_fitness", opt.avg_fitness},
                                     {"crossover_probability", opt.pc},
                                     {"mutation_probability", opt.pm}}}};
        cli::write_output(j.dump(2) + "\n", out);
        return 0;
    }

    if (out.format == "csv") {
        std::string csv =
            "pattern,length,order,defining_length,disruption_probability,"
            "expected_schema_count,cardinality,max_schemata_count\n";
        csv += fmt::format("{},{},{},{},{},{},{},{}\n", schema.pattern(), schema.length(),
                           schema.order(), schema.defining_length(), disruption, expected,
                           opt.cardinality, schemata.str());
        cli::write_output(csv, out);
        return 0;
    }

    std::string text;
    text += fmt::format("pattern:                {}\n", schema.pattern());
    text += fmt::format("length:                 {}\n", schema.length());
    text += fmt::format("order:                  {}\n", schema.order());
    text += fmt::format("defining length:        {}\n", schema.defining_length());
    text += fmt::format("disruption probability: {} (pc = {})\n", disruption, opt.pc);
    text += fmt::format("expected next count:    {} (m = {}, f_schema = {}, f_pop = {}, pm = {})\n",
                        expected, opt.count_now, opt.schema_fitness, opt.avg_fitness, opt.pm);
    text += fmt::format("schemata for k = {}:    {}\n", opt.cardinality, schemata.str());
    cli::write_output(text, out);
    return 0;
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "Write the report to PATH instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bit-packed binary chromosomes: OneMax GA runs, utilization tables, "
                 "packed-vs-naive benchmarks, and schema formula evaluation"};
    app.require_subcommand(1);

    // run
    GAConfig run_cfg;
    bool run_signed = false;
    unsigned run_width = 64;
    std::string run_selection = "tournament";
    double run_target = 0.0;
    bool run_fallback = false;
    OutputOptions run_out;
    CLI::App* run = app.add_subcommand("run", "Run the OneMax genetic algorithm");
    run->set_config("--config", "", "Flat key=value configuration file (flags take precedence)");
    run->add_option("--length", run_cfg.chromosome_length, "Chromosome length (alleles)")
        ->capture_default_str();
    run->add_option("--pop", run_cfg.population_size, "Population size (even)")
        ->capture_default_str();
    run->add_option("--pc", run_cfg.crossover_probability, "Crossover probability")
        ->capture_default_str();
    auto* pm_opt = run->add_option("--pm", run_cfg.mutation_probability,
                                   "Per-allele mutation probability (default 1/length)");
    run->add_option("--gens", run_cfg.max_generations, "Maximum generations")
        ->capture_default_str();
    run->add_option("--seed", run_cfg.seed, "Random seed")
        ->envname("BITCHROM_SEED")
        ->capture_default_str();
    run->add_option("--width", run_width, "Element width in bits")
        ->check(CLI::IsMember({8, 16, 32, 64}))
        ->capture_default_str();
    run->add_flag("--signed", run_signed, "Use signed elements (MSB unused)");
    run->add_option("--selection", run_selection, "Selection method")
        ->check(CLI::IsMember({"tournament", "roulette"}))
        ->capture_default_str();
    run->add_option("--tournament-size", run_cfg.selection.tournament_size, "Tournament size")
        ->capture_default_str();
    run->add_option("--elitism", run_cfg.elitism_count,
                    "Best individuals copied unchanged each generation")
        ->capture_default_str();
    auto* target_opt =
        run->add_option("--target-fitness", run_target, "Stop once best fitness reaches this");
    run->add_flag("--roulette-fallback-uniform", run_fallback,
                  "Fall back to uniform selection when total fitness is zero");
    add_output_options(run, run_out);

    // tables
    std::uint64_t tables_capacity = 1 << 16;
    OutputOptions tables_out;
    CLI::App* tables = app.add_subcommand(
        "tables", "Per-width utilization summary at maximum chromosome length");
    tables->set_config("--config", "", "Flat key=value configuration file");
    tables->add_option("--capacity", tables_capacity, "Maximum array element count")
        ->capture_default_str();
    add_output_options(tables, tables_out);

    // bench
    BenchOptions bench_opt;
    OutputOptions bench_out;
    CLI::App* bench = app.add_subcommand(
        "bench", "Memory accounting and packed-vs-naive differential checks");
    bench->set_config("--config", "", "Flat key=value configuration file");
    bench->add_option("--steps", bench_opt.steps, "Operations per differential run")
        ->capture_default_str();
    bench->add_option("--seed", bench_opt.seed, "Random seed")
        ->envname("BITCHROM_SEED")
        ->capture_default_str();
    bench->add_option("--capacity", bench_opt.capacity,
                      "Array element count for the memory rows")
        ->capture_default_str();
    bench->add_option("--lengths", bench_opt.lengths,
                      "Chromosome lengths (default: per-layout sweep)");
    bench->add_option("--width", bench_opt.width, "Restrict to one element width (0 = all)")
        ->check(CLI::IsMember({0, 8, 16, 32, 64}))
        ->capture_default_str();
    bench->add_flag("--signed", bench_opt.is_signed,
                    "With --width: use the signed layout of that width");
    add_output_options(bench, bench_out);

    // analyze
    AnalyzeOptions analyze_opt;
    OutputOptions analyze_out;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Schema order, defining length, and expected counts");
    analyze->set_config("--config", "", "Flat key=value configuration file");
    analyze->add_option("--pattern", analyze_opt.pattern, "Schema over {0,1,*}")->required();
    analyze->add_option("--cardinality", analyze_opt.cardinality, "Genotype alphabet cardinality")
        ->capture_default_str();
    analyze->add_option("--count-now", analyze_opt.count_now, "Schema member count m(H)")
        ->capture_default_str();
    analyze->add_option("--schema-fitness", analyze_opt.schema_fitness,
                        "Observed average fitness of the schema")
        ->capture_default_str();
    analyze->add_option("--avg-fitness", analyze_opt.avg_fitness,
                        "Observed average fitness of the population")
        ->capture_default_str();
    analyze->add_option("--pc", analyze_opt.pc, "Crossover probability")->capture_default_str();
    analyze->add_option("--pm", analyze_opt.pm, "Per-allele mutation probability")
        ->capture_default_str();
    add_output_options(analyze, analyze_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            run_cfg.layout =
                LayoutSpec(run_width, run_signed ? Signedness::Signed : Signedness::Unsigned);
            run_cfg.selection.method = run_selection == "roulette"
                                           ? SelectionMethod::RouletteWheel
                                           : SelectionMethod::Tournament;
            run_cfg.selection.roulette_fallback_uniform = run_fallback;
            if (pm_opt->count() == 0) {
                run_cfg.mutation_probability =
                    1.0 / static_cast<double>(run_cfg.chromosome_length);
            }
            if (target_opt->count() > 0) {
                run_cfg.target_fitness = run_target;
            }
            return cmd_run(run_cfg, run_out);
        }
        if (tables->parsed()) {
            return cmd_tables(tables_capacity, tables_out);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_opt, bench_out);
        }
        if (analyze->parsed()) {
            return cmd_analyze(analyze_opt, analyze_out);
        }
    } catch (const ConfigurationError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidLengthError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidCapacityError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityExceededError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const IncompatibleSchemaError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
