#include "streclcs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "streclcs/core.hpp"
#include "streclcs/oracles.hpp"

namespace streclcs {

namespace {

std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix64(seed ^ mix64(index)));
}

// Bounded draw with engine-defined arithmetic only, so results are identical
// across platforms (std::uniform_int_distribution is not).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

std::string random_string(std::mt19937_64& rng, std::size_t len, Code alphabet) {
    std::string s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        s.push_back(static_cast<char>('a' + draw_below(rng, alphabet)));
    }
    return s;
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t result_digest(std::uint64_t index, std::size_t length,
                            const CodedString& witness, std::uint64_t cells) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, &index, sizeof index);
    h = fnv1a(h, &length, sizeof length);
    h = fnv1a(h, &cells, sizeof cells);
    if (!witness.empty()) h = fnv1a(h, witness.data(), witness.size() * sizeof(Code));
    return mix64(h);
}

std::string dump_instance(const RawInstance& raw) {
    std::ostringstream os;
    os << "a=\"" << raw.a << "\" b=\"" << raw.b << "\" p=\"" << raw.p << "\"";
    return os.str();
}

}  // namespace

RawInstance generate_instance(const FuzzConfig& config, std::uint64_t index) {
    std::mt19937_64 rng = engine_for(config.seed, index);
    RawInstance raw;
    raw.a = random_string(rng, draw_below(rng, config.max_m + 1), config.alphabet_size);
    raw.b = random_string(rng, draw_below(rng, config.max_n + 1), config.alphabet_size);
    raw.p = random_string(rng, 1 + draw_below(rng, config.max_r), config.alphabet_size);
    return raw;
}

std::optional<std::string> check_instance(const RawInstance& raw) {
    const EncodedProblem enc = encode_problem(raw.a, raw.b, raw.p);
    const ProblemInstance& inst = enc.instance;
    const std::size_t m = inst.m();
    const std::uint32_t r = static_cast<std::uint32_t>(inst.r());

    const NextOcc occ = build_next_occ(inst.b, inst.sigma_size);
    const OverlapAutomaton autom = build_overlap_automaton(inst.p, inst.alphabet_size);
    const auto [table, stats] = run_diagonals(inst, occ, autom, true);
    const std::size_t length = stats.best_length;
    const Pos sentinel = table.sentinel();

    auto fail = [&raw](const std::string& what) -> std::optional<std::string> {
        return what + " [" + dump_instance(raw) + "]";
    };

    const CodedString witness = backtrack(table, inst.a, length);
    if (witness.size() != length) return fail("diagonal witness has wrong length");
    if (!validate_witness(inst, witness)) return fail("diagonal witness rejected");

    const OracleResult wang = wang_dp(inst);
    if (wang.length != length) {
        return fail("cubic reference disagrees: " + std::to_string(wang.length) + " vs " +
                    std::to_string(length));
    }
    if (wang.witness.size() != wang.length || !validate_witness(inst, wang.witness)) {
        return fail("cubic reference witness rejected");
    }

    const OracleResult brute = brute_force_streclcs(inst);
    if (brute.length != length) {
        return fail("exhaustive enumeration disagrees: " + std::to_string(brute.length) +
                    " vs " + std::to_string(length));
    }
    if (!validate_witness(inst, brute.witness)) return fail("exhaustive witness rejected");

    // Values never grow when one more character of a becomes available.
    for (std::size_t c = 0; c < table.diagonal_count(); ++c) {
        for (std::size_t s = 0; s < table.depth(c); ++s) {
            const std::size_t i = c + s;
            for (std::uint32_t k = 0; k < r; ++k) {
                if (i >= 1 && table.value_at(i, s, k) > table.value_at(i - 1, s, k)) {
                    return fail("table value increased across a column");
                }
                const BackRef ref = table.back_at(i, s, k);
                if (ref.is_extend()) {
                    const std::uint32_t t = ref.extend_state();
                    const Code k2 = autom.step(t, inst.a[i - 1]);
                    if (k2 >= r) return fail("extend through a pattern-completing transition");
                    if (k2 != k) return fail("extend recorded under the wrong overlap state");
                    if (table.value_at(i - 1, s - 1, t) >= sentinel) {
                        return fail("extend from a sentinel cell");
                    }
                }
            }
        }
    }

    const std::uint64_t bound = 2ull * (length + 2) * (m - length + 2) * r;
    if (stats.cells_computed > bound) {
        return fail("cell count " + std::to_string(stats.cells_computed) +
                    " exceeds bound " + std::to_string(bound));
    }
    if (stats.cells_computed < static_cast<std::uint64_t>(length) * r) {
        return fail("cell count below the trivial minimum");
    }
    return std::nullopt;
}

namespace {

struct InstanceOutcome {
    std::optional<std::string> error;
    std::uint64_t digest = 0;
    std::uint64_t cells = 0;
};

InstanceOutcome run_one(const FuzzConfig& config, std::uint64_t index) {
    const RawInstance raw = generate_instance(config, index);
    InstanceOutcome outcome;
    outcome.error = check_instance(raw);
    if (!outcome.error) {
        const EncodedProblem enc = encode_problem(raw.a, raw.b, raw.p);
        const SolveResult res = solve(enc.instance, true);
        outcome.digest = result_digest(index, res.length, *res.witness,
                                       res.stats.cells_computed);
        outcome.cells = res.stats.cells_computed;
    }
    return outcome;
}

}  // namespace

FuzzReport fuzz(const FuzzConfig& config) {
    if (std::min(config.max_m, config.max_n) > kBruteForceLimit) {
        throw std::invalid_argument(
            "fuzz sizes exceed the exhaustive solver's guard of " +
            std::to_string(kBruteForceLimit));
    }
    const auto start = std::chrono::steady_clock::now();
    FuzzReport report;

    if (config.workers <= 1) {
        for (std::uint64_t index = 0; index < config.instance_count; ++index) {
            const InstanceOutcome out = run_one(config, index);
            ++report.instances_run;
            if (out.error) {
                report.passed = false;
                report.failure = FuzzFailure{index, generate_instance(config, index), *out.error};
                break;
            }
            report.digest ^= out.digest;
            report.total_cells += out.cells;
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::atomic<bool> stop{false};
        std::mutex mu;
        std::uint64_t digest = 0;
        std::uint64_t total_cells = 0;
        std::uint64_t instances_run = 0;
        std::optional<FuzzFailure> first_failure;
        auto worker = [&]() {
            for (;;) {
                if (stop.load(std::memory_order_relaxed)) return;
                const std::uint64_t index = next.fetch_add(1, std::memory_order_relaxed);
                if (index >= config.instance_count) return;
                const InstanceOutcome out = run_one(config, index);
                std::lock_guard<std::mutex> lock(mu);
                ++instances_run;
                if (out.error) {
                    if (!first_failure || index < first_failure->index) {
                        first_failure =
                            FuzzFailure{index, generate_instance(config, index), *out.error};
                    }
                    stop.store(true, std::memory_order_relaxed);
                } else {
                    digest ^= out.digest;
                    total_cells += out.cells;
                }
            }
        };
        std::vector<std::thread> threads;
        threads.reserve(config.workers);
        for (unsigned w = 0; w < config.workers; ++w) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
        report.instances_run = instances_run;
        report.digest = digest;
        report.total_cells = total_cells;
        if (first_failure) {
            report.passed = false;
            report.failure = first_failure;
        }
    }

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

const char* bench_generator_name(BenchGenerator gen) {
    switch (gen) {
        case BenchGenerator::HighSimilarity: return "high-similarity";
        case BenchGenerator::LowSimilarity: return "low-similarity";
        case BenchGenerator::Random: return "random";
        case BenchGenerator::AdversarialPattern: return "adversarial-pattern";
    }
    return "unknown";
}

std::optional<BenchGenerator> bench_generator_from_name(std::string_view name) {
    if (name == "high-similarity") return BenchGenerator::HighSimilarity;
    if (name == "low-similarity") return BenchGenerator::LowSimilarity;
    if (name == "random") return BenchGenerator::Random;
    if (name == "adversarial-pattern") return BenchGenerator::AdversarialPattern;
    return std::nullopt;
}

RawInstance generate_bench_instance(const BenchFamily& family, unsigned rep) {
    const std::uint64_t tag =
        mix64(static_cast<std::uint64_t>(family.generator) * 0x10001ull + rep) ^
        mix64(family.m * 31 + family.n * 7 + family.r);
    std::mt19937_64 rng = engine_for(family.seed, tag);
    RawInstance raw;
    switch (family.generator) {
        case BenchGenerator::HighSimilarity: {
            // Large alphabet so a short pattern absent from both strings exists.
            const Code sigma = 26;
            raw.b = random_string(rng, family.n, sigma);
            raw.a = raw.b;
            for (std::size_t e = 0; e < family.edits && raw.a.size() > 1; ++e) {
                const std::size_t pos = draw_below(rng, raw.a.size());
                if (draw_below(rng, 2) == 0) {
                    raw.a.erase(raw.a.begin() + static_cast<std::ptrdiff_t>(pos));
                } else {
                    raw.a[pos] = static_cast<char>('a' + draw_below(rng, sigma));
                }
            }
            for (int tries = 0; tries < 100000; ++tries) {
                raw.p = random_string(rng, family.r, sigma);
                if (raw.a.find(raw.p) == std::string::npos &&
                    raw.b.find(raw.p) == std::string::npos) {
                    return raw;
                }
            }
            throw std::invalid_argument(
                "no absent pattern found; alphabet too small for this size");
        }
        case BenchGenerator::LowSimilarity: {
            const Code half = std::max<Code>(1, family.alphabet / 2);
            raw.a = random_string(rng, family.m, half);
            raw.b = random_string(rng, family.n, half);
            for (char& ch : raw.b) ch = static_cast<char>(ch + half);   // disjoint pool
            const char shared_lo = static_cast<char>('a' + 2 * half);
            for (std::size_t x = 0; x < family.overlap; ++x) {
                if (!raw.a.empty()) {
                    raw.a[draw_below(rng, raw.a.size())] =
                        static_cast<char>(shared_lo + draw_below(rng, 2));
                }
                if (!raw.b.empty()) {
                    raw.b[draw_below(rng, raw.b.size())] =
                        static_cast<char>(shared_lo + draw_below(rng, 2));
                }
            }
            raw.p = random_string(rng, family.r, 2);
            for (char& ch : raw.p) ch = static_cast<char>(ch - 'a' + shared_lo);
            return raw;
        }
        case BenchGenerator::Random: {
            raw.a = random_string(rng, family.m, family.alphabet);
            raw.b = random_string(rng, family.n, family.alphabet);
            raw.p = random_string(rng, family.r, family.alphabet);
            return raw;
        }
        case BenchGenerator::AdversarialPattern: {
            raw.a = random_string(rng, family.m, 2);
            raw.b = random_string(rng, family.n, 2);
            // Heavily self-overlapping pattern: a...ab.
            raw.p.assign(family.r, 'a');
            raw.p.back() = 'b';
            if (family.r == 1) raw.p = "a";
            return raw;
        }
    }
    return raw;
}

std::vector<BenchRow> bench(const BenchFamily& family) {
    std::vector<BenchRow> rows;
    rows.reserve(family.reps);
    for (unsigned rep = 0; rep < family.reps; ++rep) {
        const RawInstance raw = generate_bench_instance(family, rep);
        const EncodedProblem enc = encode_problem(raw.a, raw.b, raw.p);
        const ProblemInstance& inst = enc.instance;

        BenchRow row;
        row.family = bench_generator_name(family.generator);
        row.m = inst.m();
        row.n = inst.n();
        row.r = inst.r();
        row.rep = rep;
        row.wang_table = static_cast<std::uint64_t>(inst.m()) * inst.n() * inst.r();

        const auto t0 = std::chrono::steady_clock::now();
        const SolveResult res = solve(inst, false);
        const auto t1 = std::chrono::steady_clock::now();
        row.length = res.length;
        row.cells = res.stats.cells_computed;
        row.solve_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        if (family.run_wang && row.wang_table <= family.wang_budget) {
            WangOptions opt;
            opt.budget = family.wang_budget;
            opt.want_witness = false;
            const auto t2 = std::chrono::steady_clock::now();
            const OracleResult wang = wang_dp(inst, opt);
            const auto t3 = std::chrono::steady_clock::now();
            row.wang_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();
            if (wang.length != res.length) {
                throw std::runtime_error("cubic reference disagreed during benchmarking");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    assert(xs.size() == ys.size() && xs.size() >= 2);
    const std::size_t n = xs.size();
    double sx = 0, sy = 0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    return num / den;
}

SweepResult bench_sweep(BenchFamily family, unsigned min_exp, unsigned max_exp) {
    assert(min_exp < max_exp);
    SweepResult sweep;
    std::vector<double> sizes;
    std::vector<double> tables;
    family.run_wang = false;   // the cubic table size is reported arithmetically
    for (unsigned e = min_exp; e <= max_exp; ++e) {
        family.m = family.n = std::size_t{1} << e;
        const std::vector<BenchRow> rows = bench(family);
        double cells = 0;
        double table = 0;
        for (const BenchRow& row : rows) {
            cells += static_cast<double>(row.cells);
            table += static_cast<double>(row.wang_table);
            sweep.rows.push_back(row);
        }
        sizes.push_back(static_cast<double>(family.m));
        sweep.mean_cells.push_back(cells / rows.size());
        tables.push_back(table / rows.size());
    }
    sweep.cells_slope = fit_loglog_slope(sizes, sweep.mean_cells);
    sweep.wang_table_slope = fit_loglog_slope(sizes, tables);
    return sweep;
}

}  // namespace streclcs
