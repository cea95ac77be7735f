#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "streclcs/codec.hpp"
#include "streclcs/core.hpp"
#include "streclcs/harness.hpp"
#include "streclcs/oracles.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Plain text input: the whole file with exactly one trailing newline removed.
std::string read_text_input(const std::string& path) {
    std::string s = read_file_bytes(path);
    if (!s.empty() && s.back() == '\n') {
        s.pop_back();
        if (!s.empty() && s.back() == '\r') s.pop_back();
    }
    return s;
}

// FASTA input: sequence lines of the first record, concatenated.
std::string read_fasta_input(const std::string& path) {
    std::istringstream in(read_file_bytes(path));
    std::string line;
    bool in_record = false;
    std::string seq;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (in_record) break;
            continue;
        }
        if (line[0] == '>') {
            if (in_record) break;   // start of the second record
            in_record = true;
            continue;
        }
        if (!in_record) throw InputError("malformed FASTA (no header line): " + path);
        seq += line;
    }
    if (!in_record) throw InputError("malformed FASTA (no record): " + path);
    return seq;
}

struct SolveArgs {
    std::string a, b, p;
    std::string a_file, b_file, p_file;
    std::string a_fasta, b_fasta;
    std::string algo = "fast";
    std::uint64_t budget = 100000000;
    bool witness = false;
    bool json = false;
    bool verify = false;
    bool stats = false;
};

struct Inputs {
    std::string a, b, p;
    bool has_p = false;
};

Inputs resolve_inputs(const SolveArgs& args) {
    const bool inline_given = !args.a.empty() || !args.b.empty();
    const bool files_given = !args.a_file.empty() || !args.b_file.empty();
    const bool fasta_given = !args.a_fasta.empty() || !args.b_fasta.empty();
    const int sources = int(inline_given) + int(files_given) + int(fasta_given);
    if (sources != 1) {
        throw InputError("exactly one input source required: --a/--b, --a-file/--b-file, "
                         "or --a-fasta/--b-fasta");
    }
    Inputs in;
    if (inline_given) {
        in.a = args.a;
        in.b = args.b;
    } else if (files_given) {
        if (args.a_file.empty() || args.b_file.empty()) {
            throw InputError("both --a-file and --b-file are required");
        }
        in.a = read_text_input(args.a_file);
        in.b = read_text_input(args.b_file);
    } else {
        if (args.a_fasta.empty() || args.b_fasta.empty()) {
            throw InputError("both --a-fasta and --b-fasta are required");
        }
        in.a = read_fasta_input(args.a_fasta);
        in.b = read_fasta_input(args.b_fasta);
    }
    if (!args.p.empty()) {
        in.p = args.p;
        in.has_p = true;
    } else if (!args.p_file.empty()) {
        in.p = read_text_input(args.p_file);
        in.has_p = true;
    }
    return in;
}

struct Outcome {
    std::size_t length = 0;
    std::optional<streclcs::CodedString> witness;
    std::uint64_t cells = 0;
    double time_ms = 0.0;
};

int run_solve(const SolveArgs& args) {
    using namespace streclcs;

    const Inputs in = resolve_inputs(args);
    const bool is_lcs = args.algo == "lcs";
    if (!is_lcs && !in.has_p) throw EmptyPatternError();

    // The plain-LCS path ignores the pattern; encoding still needs one.
    const std::string p_eff = in.has_p ? in.p : std::string(1, 'x');
    const EncodedProblem enc = encode_problem(in.a, in.b, p_eff);
    const ProblemInstance& inst = enc.instance;
    const bool need_witness = args.witness || args.verify;

    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    if (args.algo == "fast") {
        const SolveResult res = solve(inst, need_witness);
        out.length = res.length;
        out.witness = res.witness;
        out.cells = res.stats.cells_computed;
    } else if (args.algo == "wang") {
        WangOptions opt;
        opt.budget = args.budget;
        opt.want_witness = need_witness;
        const OracleResult res = wang_dp(inst, opt);
        out.length = res.length;
        if (need_witness) out.witness = res.witness;
        out.cells = res.work;
    } else if (args.algo == "brute") {
        const OracleResult res = brute_force_streclcs(inst);
        out.length = res.length;
        out.witness = res.witness;
        out.cells = res.work;
    } else if (is_lcs) {
        const LcsResult res = nakatsu_lcs(inst.a, inst.b);
        out.length = res.length;
        out.witness = res.witness;
        out.cells = res.cells;
    } else {
        throw InputError("unknown algorithm: " + args.algo);
    }
    const auto t1 = std::chrono::steady_clock::now();
    out.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (args.verify) {
        std::size_t other = 0;
        if (args.algo == "fast") {
            WangOptions opt;
            opt.budget = args.budget;
            opt.want_witness = false;
            other = wang_dp(inst, opt).length;
        } else if (is_lcs) {
            // A pattern longer than both inputs can never occur in a common
            // subsequence, so the constrained solver degenerates to plain LCS.
            const std::string p_vac(std::min(in.a.size(), in.b.size()) + 1, 'a');
            other = solve(encode_problem(in.a, in.b, p_vac).instance).length;
        } else {
            other = solve(inst).length;
        }
        if (other != out.length) {
            std::cerr << "verify: length mismatch: " << out.length << " vs " << other << "\n";
            return kExitMismatch;
        }
        if (out.witness) {
            bool ok;
            if (is_lcs) {
                ok = out.witness->size() == out.length &&
                     is_subsequence(*out.witness, inst.a) &&
                     is_subsequence(*out.witness, inst.b);
            } else {
                ok = out.witness->size() == out.length && validate_witness(inst, *out.witness);
            }
            if (!ok) {
                std::cerr << "verify: witness rejected\n";
                return kExitMismatch;
            }
        }
    }

    if (args.json) {
        nlohmann::json j;
        j["length"] = out.length;
        if (args.witness) j["witness"] = enc.codec.decode(*out.witness);
        j["algorithm"] = args.algo;
        j["cells_computed"] = out.cells;
        j["time_ms"] = out.time_ms;
        j["swapped"] = inst.swapped;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << out.length << "\n";
        if (args.witness) std::cout << enc.codec.decode(*out.witness) << "\n";
        if (args.stats) {
            std::cout << "# algorithm=" << args.algo << " cells_computed=" << out.cells
                      << " time_ms=" << out.time_ms << " swapped=" << (inst.swapped ? 1 : 0)
                      << " m=" << inst.m() << " n=" << inst.n() << " r=" << inst.r() << "\n";
        }
    }
    return kExitOk;
}

struct FuzzArgs {
    streclcs::FuzzConfig config;
    bool json = false;
};

int run_fuzz(const FuzzArgs& args) {
    using namespace streclcs;
    const FuzzReport report = fuzz(args.config);
    if (args.json) {
        nlohmann::json j;
        j["instances"] = report.instances_run;
        j["passed"] = report.passed;
        j["seed"] = args.config.seed;
        j["digest"] = report.digest;
        j["total_cells"] = report.total_cells;
        j["seconds"] = report.seconds;
        if (report.failure) {
            j["failure"] = {{"index", report.failure->index},
                            {"a", report.failure->instance.a},
                            {"b", report.failure->instance.b},
                            {"p", report.failure->instance.p},
                            {"message", report.failure->message}};
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "fuzz: " << report.instances_run << " instances, seed "
                  << args.config.seed << ", " << report.seconds << " s\n";
        if (report.passed) {
            std::cout << "fuzz: PASS digest=" << std::hex << report.digest << std::dec << "\n";
        } else {
            std::cout << "fuzz: FAIL at instance " << report.failure->index << "\n"
                      << "  a=\"" << report.failure->instance.a << "\"\n"
                      << "  b=\"" << report.failure->instance.b << "\"\n"
                      << "  p=\"" << report.failure->instance.p << "\"\n"
                      << "  " << report.failure->message << "\n"
                      << "  replay: --seed " << args.config.seed << " --count "
                      << (report.failure->index + 1) << "\n";
        }
    }
    return report.passed ? kExitOk : kExitMismatch;
}

struct BenchArgs {
    streclcs::BenchFamily family;
    std::string family_name = "random";
    bool no_wang = false;
    bool sweep = false;
    unsigned min_exp = 10;
    unsigned max_exp = 14;
    bool check_slope = false;
    double slope_limit = 1.3;
    bool json = false;
};

void print_row(const streclcs::BenchRow& row, bool json) {
    if (json) {
        nlohmann::json j;
        j["family"] = row.family;
        j["m"] = row.m;
        j["n"] = row.n;
        j["r"] = row.r;
        j["rep"] = row.rep;
        j["length"] = row.length;
        j["solve_ms"] = row.solve_ms;
        j["cells_computed"] = row.cells;
        j["wang_table"] = row.wang_table;
        if (row.wang_ms >= 0) j["wang_ms"] = row.wang_ms;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "family=" << row.family << " m=" << row.m << " n=" << row.n
                  << " r=" << row.r << " rep=" << row.rep << " length=" << row.length
                  << " cells=" << row.cells << " solve_ms=" << row.solve_ms
                  << " wang_table=" << row.wang_table;
        if (row.wang_ms >= 0) std::cout << " wang_ms=" << row.wang_ms;
        std::cout << "\n";
    }
}

int run_bench(BenchArgs& args) {
    using namespace streclcs;
    const auto gen = bench_generator_from_name(args.family_name);
    if (!gen) throw InputError("unknown family: " + args.family_name);
    args.family.generator = *gen;
    args.family.run_wang = !args.no_wang;

    if (args.sweep) {
        const SweepResult sweep = bench_sweep(args.family, args.min_exp, args.max_exp);
        for (const BenchRow& row : sweep.rows) print_row(row, args.json);
        if (args.json) {
            nlohmann::json j;
            j["cells_slope"] = sweep.cells_slope;
            j["wang_table_slope"] = sweep.wang_table_slope;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "cells_slope=" << sweep.cells_slope
                      << " wang_table_slope=" << sweep.wang_table_slope << "\n";
        }
        if (args.check_slope && sweep.cells_slope >= args.slope_limit) {
            std::cerr << "slope check failed: " << sweep.cells_slope << " >= "
                      << args.slope_limit << "\n";
            return kExitMismatch;
        }
        return kExitOk;
    }

    for (const BenchRow& row : bench(args.family)) print_row(row, args.json);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest common subsequence that excludes a forbidden substring"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve_cmd =
        app.add_subcommand("solve", "solve one instance (inputs A, B, pattern P)");
    solve_cmd->add_option("--a", solve_args.a, "first string");
    solve_cmd->add_option("--b", solve_args.b, "second string");
    solve_cmd->add_option("--p", solve_args.p, "forbidden pattern");
    solve_cmd->add_option("--a-file", solve_args.a_file, "first string from a text file");
    solve_cmd->add_option("--b-file", solve_args.b_file, "second string from a text file");
    solve_cmd->add_option("--p-file", solve_args.p_file, "pattern from a text file");
    solve_cmd->add_option("--a-fasta", solve_args.a_fasta, "first string from a FASTA file");
    solve_cmd->add_option("--b-fasta", solve_args.b_fasta, "second string from a FASTA file");
    solve_cmd->add_option("--algo", solve_args.algo, "fast | wang | brute | lcs")
        ->check(CLI::IsMember({"fast", "wang", "brute", "lcs"}));
    solve_cmd->add_option("--budget", solve_args.budget, "cubic reference table budget");
    solve_cmd->add_flag("--witness", solve_args.witness, "print one witness");
    solve_cmd->add_flag("--json", solve_args.json, "machine-readable output");
    solve_cmd->add_flag("--verify", solve_args.verify,
                        "cross-check with a second algorithm and validate the witness");
    solve_cmd->add_flag("--stats", solve_args.stats, "print counters");

    FuzzArgs fuzz_args;
    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "differential testing on random instances");
    fuzz_cmd->add_option("--count", fuzz_args.config.instance_count, "number of instances");
    fuzz_cmd->add_option("--max-m", fuzz_args.config.max_m, "max length of A");
    fuzz_cmd->add_option("--max-n", fuzz_args.config.max_n, "max length of B");
    fuzz_cmd->add_option("--max-r", fuzz_args.config.max_r, "max pattern length");
    fuzz_cmd->add_option("--alphabet", fuzz_args.config.alphabet_size, "alphabet size");
    fuzz_cmd->add_option("--seed", fuzz_args.config.seed, "random seed");
    fuzz_cmd->add_option("--workers", fuzz_args.config.workers, "parallel workers");
    fuzz_cmd->add_flag("--json", fuzz_args.json, "machine-readable output");

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "timing and work-counter reports");
    bench_cmd->add_option("--family", bench_args.family_name,
                          "high-similarity | low-similarity | random | adversarial-pattern");
    bench_cmd->add_option("--m", bench_args.family.m, "length of A");
    bench_cmd->add_option("--n", bench_args.family.n, "length of B");
    bench_cmd->add_option("--r", bench_args.family.r, "pattern length");
    bench_cmd->add_option("--reps", bench_args.family.reps, "instances per configuration");
    bench_cmd->add_option("--seed", bench_args.family.seed, "random seed");
    bench_cmd->add_option("--alphabet", bench_args.family.alphabet, "alphabet size");
    bench_cmd->add_option("--edits", bench_args.family.edits,
                          "high-similarity: number of edits");
    bench_cmd->add_option("--wang-budget", bench_args.family.wang_budget,
                          "skip the cubic reference above this table size");
    bench_cmd->add_flag("--no-wang", bench_args.no_wang, "skip the cubic reference");
    bench_cmd->add_flag("--sweep", bench_args.sweep, "size sweep m = n = 2^e");
    bench_cmd->add_option("--min-exp", bench_args.min_exp, "sweep: smallest exponent");
    bench_cmd->add_option("--max-exp", bench_args.max_exp, "sweep: largest exponent");
    bench_cmd->add_flag("--check-slope", bench_args.check_slope,
                        "fail if the fitted cells slope is not near-linear");
    bench_cmd->add_option("--slope-limit", bench_args.slope_limit, "slope threshold");
    bench_cmd->add_flag("--json", bench_args.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_args);
        if (fuzz_cmd->parsed()) return run_fuzz(fuzz_args);
        if (bench_cmd->parsed()) return run_bench(bench_args);
    } catch (const streclcs::EmptyPatternError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const streclcs::InstanceTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const streclcs::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
