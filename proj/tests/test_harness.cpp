#include "doctest.h"

#include <cmath>
#include <set>
#include <string>

#include "streclcs/core.hpp"
#include "streclcs/harness.hpp"
#include "test_support.hpp"

using namespace streclcs;

TEST_CASE("instance generation: deterministic and index-addressable") {
    FuzzConfig config;
    config.seed = 7;
    const RawInstance first = generate_instance(config, 42);
    const RawInstance again = generate_instance(config, 42);
    CHECK(first.a == again.a);
    CHECK(first.b == again.b);
    CHECK(first.p == again.p);

    const RawInstance other = generate_instance(config, 43);
    CHECK((first.a != other.a || first.b != other.b || first.p != other.p));

    config.seed = 8;
    const RawInstance reseeded = generate_instance(config, 42);
    CHECK((first.a != reseeded.a || first.b != reseeded.b || first.p != reseeded.p));
}

TEST_CASE("instance generation: respects the configured limits") {
    FuzzConfig config;
    config.max_m = 5;
    config.max_n = 9;
    config.max_r = 2;
    config.alphabet_size = 2;
    for (std::uint64_t index = 0; index < 500; ++index) {
        const RawInstance raw = generate_instance(config, index);
        CHECK(raw.a.size() <= 5);
        CHECK(raw.b.size() <= 9);
        CHECK(raw.p.size() >= 1);
        CHECK(raw.p.size() <= 2);
        for (char ch : raw.a + raw.b + raw.p) {
            CHECK(ch >= 'a');
            CHECK(ch < 'a' + 2);
        }
    }
}

TEST_CASE("check_instance: passes on known-good instances") {
    CHECK_FALSE(check_instance({"abcabac", "acbcaacbaa", "abc"}).has_value());
    CHECK_FALSE(check_instance({"aabacab", "baabbcaa", "aab"}).has_value());
    CHECK_FALSE(check_instance({"", "", "a"}).has_value());
    CHECK_FALSE(check_instance({"aaaa", "aaaa", "aa"}).has_value());
}

TEST_CASE("fuzz: a short run passes and is reproducible") {
    FuzzConfig config;
    config.instance_count = 400;
    config.max_m = 8;
    config.max_n = 8;
    config.max_r = 3;
    config.alphabet_size = 3;
    config.seed = 12345;

    const FuzzReport first = fuzz(config);
    CHECK(first.passed);
    CHECK(first.instances_run == 400);
    CHECK_FALSE(first.failure.has_value());
    CHECK(first.digest != 0);

    const FuzzReport again = fuzz(config);
    CHECK(again.digest == first.digest);
    CHECK(again.total_cells == first.total_cells);
}

TEST_CASE("fuzz: worker count never changes the digest") {
    FuzzConfig config;
    config.instance_count = 300;
    config.max_m = 7;
    config.max_n = 7;
    config.max_r = 3;
    config.alphabet_size = 2;
    config.seed = 99;

    const FuzzReport serial = fuzz(config);
    config.workers = 4;
    const FuzzReport parallel = fuzz(config);
    CHECK(serial.passed);
    CHECK(parallel.passed);
    CHECK(parallel.instances_run == 300);
    CHECK(parallel.digest == serial.digest);
    CHECK(parallel.total_cells == serial.total_cells);
}

TEST_CASE("fuzz: configuration beyond the enumeration guard is rejected") {
    FuzzConfig config;
    config.max_m = 21;
    config.max_n = 21;
    CHECK_THROWS_AS(fuzz(config), std::invalid_argument);
}

TEST_CASE("bench generators: names round-trip") {
    for (BenchGenerator gen :
         {BenchGenerator::HighSimilarity, BenchGenerator::LowSimilarity,
          BenchGenerator::Random, BenchGenerator::AdversarialPattern}) {
        const char* name = bench_generator_name(gen);
        REQUIRE(bench_generator_from_name(name).has_value());
        CHECK(*bench_generator_from_name(name) == gen);
    }
    CHECK_FALSE(bench_generator_from_name("no-such-family").has_value());
}

TEST_CASE("bench generators: family shapes") {
    BenchFamily family;
    family.m = family.n = 256;
    family.r = 4;

    SUBCASE("high similarity: few edits, pattern absent from both") {
        family.generator = BenchGenerator::HighSimilarity;
        family.edits = 16;
        const RawInstance raw = generate_bench_instance(family, 0);
        CHECK(raw.b.size() == 256);
        CHECK(raw.a.size() >= 256 - 16);
        CHECK(raw.p.size() == 4);
        CHECK(raw.a.find(raw.p) == std::string::npos);
        CHECK(raw.b.find(raw.p) == std::string::npos);
    }
    SUBCASE("low similarity: few characters in common") {
        family.generator = BenchGenerator::LowSimilarity;
        family.overlap = 8;
        const RawInstance raw = generate_bench_instance(family, 0);
        std::set<char> in_a(raw.a.begin(), raw.a.end());
        std::set<char> shared;
        for (char ch : raw.b) {
            if (in_a.count(ch)) shared.insert(ch);
        }
        CHECK(shared.size() <= 2);
        // the pattern draws from the two-character pool reserved for sharing
        const char pool_lo = static_cast<char>('a' + 2 * (family.alphabet / 2));
        for (char ch : raw.p) {
            CHECK(ch >= pool_lo);
            CHECK(ch <= pool_lo + 1);
        }
    }
    SUBCASE("adversarial pattern: binary strings, self-overlapping pattern") {
        family.generator = BenchGenerator::AdversarialPattern;
        const RawInstance raw = generate_bench_instance(family, 0);
        CHECK(raw.p == "aaab");
        for (char ch : raw.a + raw.b) CHECK((ch == 'a' || ch == 'b'));
    }
    SUBCASE("repetitions differ, reruns do not") {
        family.generator = BenchGenerator::Random;
        const RawInstance r0 = generate_bench_instance(family, 0);
        const RawInstance r1 = generate_bench_instance(family, 1);
        CHECK(r0.a != r1.a);
        const RawInstance r0b = generate_bench_instance(family, 0);
        CHECK(r0.a == r0b.a);
        CHECK(r0.b == r0b.b);
        CHECK(r0.p == r0b.p);
    }
}

TEST_CASE("bench: rows carry timings and the cross-check runs") {
    BenchFamily family;
    family.generator = BenchGenerator::Random;
    family.m = family.n = 128;
    family.r = 3;
    family.reps = 2;
    const std::vector<BenchRow> rows = bench(family);
    REQUIRE(rows.size() == 2);
    for (const BenchRow& row : rows) {
        CHECK(row.family == "random");
        CHECK(row.cells > 0);
        CHECK(row.solve_ms >= 0.0);
        CHECK(row.wang_table == static_cast<std::uint64_t>(row.m) * row.n * row.r);
        CHECK(row.wang_ms >= 0.0);   // small instance: the cubic check must run
    }

    family.run_wang = false;
    for (const BenchRow& row : bench(family)) {
        CHECK(row.wang_ms < 0.0);
    }
}

TEST_CASE("bench: diagonal work stays below the cubic table on a large instance") {
    BenchFamily family;
    family.generator = BenchGenerator::Random;
    family.m = family.n = 4096;
    family.r = 8;
    const RawInstance raw = generate_bench_instance(family, 0);
    const EncodedProblem enc = encode_problem(raw.a, raw.b, raw.p);
    const SolveResult res = solve(enc.instance);
    CHECK(res.length > 0);
    const std::uint64_t cubic_table = static_cast<std::uint64_t>(enc.instance.m()) *
                                      enc.instance.n() * enc.instance.r();
    CHECK(res.stats.cells_computed < cubic_table);
}

TEST_CASE("slope fitting: exact on synthetic power laws") {
    const std::vector<double> xs = {256, 512, 1024, 2048};
    std::vector<double> linear, quadratic;
    for (double x : xs) {
        linear.push_back(3.5 * x);
        quadratic.push_back(0.25 * x * x);
    }
    CHECK(std::abs(fit_loglog_slope(xs, linear) - 1.0) < 1e-9);
    CHECK(std::abs(fit_loglog_slope(xs, quadratic) - 2.0) < 1e-9);
}

TEST_CASE("sweep: high-similarity work grows almost linearly") {
    BenchFamily family;
    family.generator = BenchGenerator::HighSimilarity;
    family.r = 4;
    family.reps = 2;
    family.edits = 16;
    const SweepResult sweep = bench_sweep(family, 8, 11);   // 256 .. 2048
    REQUIRE(sweep.rows.size() == 8);
    REQUIRE(sweep.mean_cells.size() == 4);
    CHECK(sweep.cells_slope < 1.3);
    CHECK(sweep.wang_table_slope == doctest::Approx(2.0).epsilon(0.05));
    for (const BenchRow& row : sweep.rows) {
        CHECK(row.length > 0);
        CHECK(row.wang_ms < 0.0);   // sweeps only measure the diagonal solver
    }
}

TEST_CASE("sweep: low-similarity work stays well below linear growth") {
    BenchFamily family;
    family.generator = BenchGenerator::LowSimilarity;
    family.r = 4;
    family.reps = 2;
    family.overlap = 8;
    const SweepResult sweep = bench_sweep(family, 8, 11);
    REQUIRE(sweep.mean_cells.size() == 4);
    // filtering shrinks these instances to the forced shared characters, so
    // the work is essentially independent of the raw input size
    CHECK(sweep.cells_slope < 1.3);
}
