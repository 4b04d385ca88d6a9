#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include <bitchrom/schema.hpp>

#include "helpers.hpp"

using namespace bitchrom;
using bitchrom::testing::bits_of;
using boost::multiprecision::cpp_int;

namespace {

// Independent oracle: count all patterns over {alphabet + '*'}^length with a
// plain odometer, no arithmetic shared with the implementation.
cpp_int enumerate_schemata(std::uint64_t cardinality, std::uint64_t length) {
    std::vector<std::uint64_t> digits(length, 0);
    const std::uint64_t symbols = cardinality + 1;
    cpp_int count = 0;
    while (true) {
        ++count;
        std::uint64_t pos = 0;
        while (pos < length && ++digits[pos] == symbols) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == length) {
            return count;
        }
    }
}

// Second route through the expected-count formula, in extended precision
// with different operation ordering.
long double recompute_expected(const Schema& s, const SchemaTheoremInputs& in) {
    const long double selection = static_cast<long double>(in.count_now) *
                                  static_cast<long double>(in.schema_avg_fitness) /
                                  static_cast<long double>(in.population_avg_fitness);
    const long double disruption = static_cast<long double>(s.defining_length()) *
                                   static_cast<long double>(in.crossover_probability) /
                                   static_cast<long double>(in.chromosome_length - 1);
    long double mutation_survival = 1.0L;
    for (std::uint64_t i = 0; i < s.order(); ++i) {
        mutation_survival *= 1.0L - static_cast<long double>(in.mutation_probability);
    }
    return selection * (1.0L - disruption) * mutation_survival;
}

std::string random_pattern(std::uint64_t length, std::mt19937_64& rng) {
    static const char symbols[] = {'0', '1', '*'};
    std::string p(length, '*');
    std::uniform_int_distribution<int> pick(0, 2);
    for (auto& c : p) {
        c = symbols[pick(rng)];
    }
    return p;
}

} // namespace

TEST_CASE("schema parsing, order and defining length") {
    const Schema s = Schema::parse("1********0");
    CHECK(s.length() == 10);
    CHECK(s.order() == 2);
    CHECK(s.defining_length() == 9);

    const Schema all_stars = Schema::parse("*****");
    CHECK(all_stars.order() == 0);
    CHECK(all_stars.defining_length() == 0);

    const Schema single = Schema::parse("**1**");
    CHECK(single.order() == 1);
    CHECK(single.defining_length() == 0);

    const Schema mixed = Schema::parse("*01*1*");
    CHECK(mixed.order() == 3);
    CHECK(mixed.defining_length() == 3);

    CHECK_THROWS_AS(Schema::parse(""), InvalidLengthError);
    CHECK_THROWS_AS(Schema::parse("01x*"), ConfigurationError);
}

TEST_CASE("maximum schemata count") {
    CHECK(max_schemata_count(2, 3) == 27);
    CHECK(max_schemata_count(2, 10) == 59049);
    CHECK(max_schemata_count(2, 100) == cpp_int("515377520732011331036461129765621272702107522001"));

    SUBCASE("matches exhaustive enumeration") {
        for (std::uint64_t length = 1; length <= 12; ++length) {
            CHECK(max_schemata_count(2, length) == enumerate_schemata(2, length));
        }
        for (std::uint64_t length = 1; length <= 8; ++length) {
            CHECK(max_schemata_count(3, length) == enumerate_schemata(3, length));
        }
    }

    SUBCASE("recurrence (k+1) * count(L-1)") {
        for (std::uint64_t length = 2; length <= 40; ++length) {
            CHECK(max_schemata_count(2, length) == 3 * max_schemata_count(2, length - 1));
        }
    }
}

TEST_CASE("disruption probability") {
    const Schema none = Schema::parse("***1******");
    CHECK(disruption_probability(none, 10, 1.0) == 0.0);

    const Schema maximal = Schema::parse("1********1");
    CHECK(disruption_probability(maximal, 10, 1.0) == 1.0);

    // fixed defining length: longer chromosomes disrupt less
    const Schema spread5 = Schema::parse("1****1*****");
    REQUIRE(spread5.defining_length() == 5);
    const double at_11 = disruption_probability(spread5, 11, 0.8);
    const double at_101 = disruption_probability(spread5, 101, 0.8);
    CHECK(at_101 < at_11);

    CHECK_THROWS_AS(disruption_probability(Schema::parse("1"), 1, 0.5), InvalidLengthError);
    CHECK_THROWS_AS(disruption_probability(maximal, 5, 0.5), IncompatibleSchemaError);
    CHECK_THROWS_AS(disruption_probability(none, 10, 1.5), ConfigurationError);
}

TEST_CASE("expected schema count") {
    SUBCASE("worked example") {
        // order 2, defining length 2, length 11
        const Schema s = Schema::parse("**1*1******");
        REQUIRE(s.order() == 2);
        REQUIRE(s.defining_length() == 2);
        const SchemaTheoremInputs in{10.0, 1.2, 1.0, 11, 0.8, 0.01};
        CHECK(expected_schema_count(s, in) == doctest::Approx(9.8794).epsilon(1e-5));
    }

    SUBCASE("no selection pressure and no disruption returns the count unchanged") {
        const Schema s = Schema::parse("**********");
        const SchemaTheoremInputs in{7.5, 3.0, 3.0, 10, 0.9, 0.25};
        CHECK(expected_schema_count(s, in) == 7.5);
    }

    SUBCASE("pc = 0 and pm = 0 leave only the selection ratio") {
        const Schema s = Schema::parse("01*1*0****");
        const SchemaTheoremInputs in{4.0, 2.5, 2.0, 10, 0.0, 0.0};
        CHECK(expected_schema_count(s, in) == 4.0 * 2.5 / 2.0);
    }

    SUBCASE("errors") {
        const Schema s = Schema::parse("01");
        CHECK_THROWS_AS(expected_schema_count(s, {1.0, 1.0, 0.0, 2, 0.5, 0.1}),
                        DegenerateFitnessError);
        const Schema one = Schema::parse("1");
        CHECK_THROWS_AS(expected_schema_count(one, {1.0, 1.0, 1.0, 1, 0.5, 0.1}),
                        InvalidLengthError);
        CHECK_THROWS_AS(expected_schema_count(s, {1.0, 1.0, 1.0, 3, 0.5, 0.1}),
                        IncompatibleSchemaError);
        CHECK_THROWS_AS(expected_schema_count(s, {1.0, 1.0, 1.0, 2, 0.5, 1.1}),
                        ConfigurationError);
    }

    SUBCASE("matches an independent recomputation on random inputs") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<std::uint64_t> length_pick(2, 40);
        for (int i = 0; i < 100; ++i) {
            const std::uint64_t length = length_pick(rng);
            const Schema s = Schema::parse(random_pattern(length, rng));
            const SchemaTheoremInputs in{
                unit(rng) * 100.0,        // count
                0.1 + unit(rng) * 5.0,    // schema fitness
                0.1 + unit(rng) * 5.0,    // population fitness
                length,
                unit(rng),                // pc
                unit(rng) * 0.5,          // pm
            };
            const double got = expected_schema_count(s, in);
            const long double expected = recompute_expected(s, in);
            if (expected != 0.0L) {
                CHECK(std::abs(got - static_cast<double>(expected)) /
                          std::abs(static_cast<double>(expected)) <=
                      1e-9);
            } else {
                CHECK(got == 0.0);
            }
        }
    }

    SUBCASE("monotonicity") {
        std::mt19937_64 rng(18);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t length = 20;
            // order-2 schemas: defining length equals the spacing
            std::uniform_int_distribution<std::uint64_t> delta_pick(1, 9);
            const std::uint64_t d1 = delta_pick(rng);
            const std::uint64_t d2 = d1 + 1 + rng() % (length - 1 - d1 - 1);
            auto schema_with_delta = [&](std::uint64_t d) {
                std::string p(length, '*');
                p[0] = '1';
                p[d] = '1';
                return Schema::parse(p);
            };
            SchemaTheoremInputs in{1.0 + unit(rng) * 10.0, 0.5 + unit(rng),
                                   0.5 + unit(rng),        length,
                                   unit(rng),              unit(rng) * 0.5};

            const double base = expected_schema_count(schema_with_delta(d1), in);
            CHECK(expected_schema_count(schema_with_delta(d2), in) <= base);

            auto bumped = in;
            bumped.crossover_probability = std::min(1.0, in.crossover_probability + 0.3);
            CHECK(expected_schema_count(schema_with_delta(d1), bumped) <= base);

            bumped = in;
            bumped.mutation_probability = std::min(1.0, in.mutation_probability + 0.3);
            CHECK(expected_schema_count(schema_with_delta(d1), bumped) <= base);

            bumped = in;
            bumped.schema_avg_fitness = in.schema_avg_fitness + 1.0;
            CHECK(expected_schema_count(schema_with_delta(d1), bumped) > base);
        }
    }
}

TEST_CASE("counting schema members in a population") {
    const LayoutSpec u8(8, Signedness::Unsigned);
    std::mt19937_64 rng(19);

    Population pop;
    for (int i = 0; i < 20; ++i) {
        PackedChromosome c = PackedChromosome::random(10, u8, rng);
        const double f = onemax_fitness(c);
        pop.members.push_back(Individual{std::move(c), f});
    }

    SUBCASE("all-star schema matches everyone") {
        CHECK(count_matching(pop, Schema::parse("**********")) == 20);
    }

    SUBCASE("impossible fixed position matches no one") {
        Population zeros;
        for (int i = 0; i < 5; ++i) {
            zeros.members.push_back(Individual{PackedChromosome::zero(10, u8), 0.0});
        }
        CHECK(count_matching(zeros, Schema::parse("1*********")) == 0);
    }

    SUBCASE("random schemas agree with a position-by-position oracle") {
        for (int trial = 0; trial < 200; ++trial) {
            const std::string pattern = random_pattern(10, rng);
            const Schema s = Schema::parse(pattern);
            std::size_t expected = 0;
            for (const auto& member : pop.members) {
                const auto bits = member.chromosome.unpack();
                bool ok = true;
                for (std::size_t i = 0; i < pattern.size(); ++i) {
                    if (pattern[i] == '0' && bits[i] != 0) ok = false;
                    if (pattern[i] == '1' && bits[i] != 1) ok = false;
                }
                expected += ok;
            }
            CHECK(count_matching(pop, s) == expected);
            CHECK(count_matching(pop, s) <= pop.members.size());
        }
    }

    SUBCASE("length mismatch is rejected") {
        CHECK_THROWS_AS(count_matching(pop, Schema::parse("***")), IncompatibleSchemaError);
    }
}
