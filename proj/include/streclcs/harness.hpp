#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streclcs/codec.hpp"

namespace streclcs {

// SplitMix64 mixer; used for seeding per-instance engines and for digests.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct RawInstance {
    std::string a;
    std::string b;
    std::string p;
};

struct FuzzConfig {
    std::uint64_t instance_count = 10000;
    std::size_t max_m = 12;
    std::size_t max_n = 12;
    std::size_t max_r = 4;
    Code alphabet_size = 3;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

// Instance `index` of a run; depends only on (config limits, seed, index),
// so any instance can be regenerated in isolation.
RawInstance generate_instance(const FuzzConfig& config, std::uint64_t index);

struct FuzzFailure {
    std::uint64_t index = 0;
    RawInstance instance;
    std::string message;
};

struct FuzzReport {
    std::uint64_t instances_run = 0;
    bool passed = true;
    std::optional<FuzzFailure> failure;
    std::uint64_t digest = 0;        // order-independent hash of all per-instance results
    std::uint64_t total_cells = 0;
    double seconds = 0.0;
};

/*
 * Differential fuzzing: for every generated instance the diagonal solver, the
 * cubic reference, and the exhaustive enumeration must agree on the length;
 * all witnesses must validate; the table must be monotone across columns,
 * must never extend through a pattern-completing transition, and must stay
 * within the cell budget 2*(L+2)*(m-L+2)*r. Stops at the first counterexample
 * and reports the offending instance. Throws std::invalid_argument if the
 * configured sizes exceed the exhaustive solver's guard.
 */
FuzzReport fuzz(const FuzzConfig& config);

// Runs the full check battery on one instance; empty result means it passed.
std::optional<std::string> check_instance(const RawInstance& raw);

enum class BenchGenerator {
    HighSimilarity,      // b random; a = b with a fixed number of edits; pattern absent from both
    LowSimilarity,       // near-disjoint alphabets with a few forced shared characters
    Random,              // uniform strings over a small alphabet
    AdversarialPattern,  // binary strings with a heavily self-overlapping pattern
};

const char* bench_generator_name(BenchGenerator gen);
std::optional<BenchGenerator> bench_generator_from_name(std::string_view name);

struct BenchFamily {
    BenchGenerator generator = BenchGenerator::Random;
    std::size_t m = 1024;
    std::size_t n = 1024;
    std::size_t r = 4;
    unsigned reps = 3;
    std::uint64_t seed = 1;
    Code alphabet = 4;           // HighSimilarity ignores this and uses 26
    std::size_t edits = 16;      // HighSimilarity: number of random deletions/substitutions
    std::size_t overlap = 8;     // LowSimilarity: forced shared characters per string
    std::uint64_t wang_budget = 100000000;
    bool run_wang = true;        // wang runs only when m*n*r fits the budget anyway
};

struct BenchRow {
    std::string family;
    std::size_t m = 0;           // filtered instance sizes
    std::size_t n = 0;
    std::size_t r = 0;
    unsigned rep = 0;
    std::size_t length = 0;
    double solve_ms = 0.0;
    std::uint64_t cells = 0;
    std::uint64_t wang_table = 0;   // m*n*r for the same instance
    double wang_ms = -1.0;          // negative when the cubic reference was skipped
};

RawInstance generate_bench_instance(const BenchFamily& family, unsigned rep);

std::vector<BenchRow> bench(const BenchFamily& family);

/*
 * Size sweep m = n = 2^e for e in [min_exp, max_exp]; fits the least-squares
 * slope of log(cells) against log(m), and the same for the cubic reference's
 * table size. A slope near 1 means the diagonal solver's work grows linearly
 * with the input length; the cubic table is quadratic by construction.
 */
struct SweepResult {
    std::vector<BenchRow> rows;
    std::vector<double> mean_cells;   // one entry per size
    double cells_slope = 0.0;
    double wang_table_slope = 0.0;
};

SweepResult bench_sweep(BenchFamily family, unsigned min_exp, unsigned max_exp);

// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace streclcs
