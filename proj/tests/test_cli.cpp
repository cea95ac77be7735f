#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "streclcs/codec.hpp"
#include "test_support.hpp"

#ifndef STRECLCS_CLI_PATH
#error "STRECLCS_CLI_PATH must point at the built binary"
#endif

namespace ts = test_support;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(STRECLCS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : s) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_(std::filesystem::temp_directory_path() / name) {
        std::ofstream out(path_, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

const std::string kSolve1 = std::string("solve --a ") + ts::kEx1A + " --b " + ts::kEx1B +
                            " --p " + ts::kEx1P;

}  // namespace

TEST_CASE("cli solve: length on stdout, exit 0") {
    const CliResult res = run_cli(kSolve1);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "5\n");
}

TEST_CASE("cli solve: witness and counters") {
    const CliResult res = run_cli(kSolve1 + " --witness --stats");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "5");
    CHECK(lines[1].size() == 5);
    const streclcs::EncodedProblem enc =
        streclcs::encode_problem(ts::kEx1A, ts::kEx1B, ts::kEx1P);
    CHECK(streclcs::validate_witness(enc.instance, enc.codec.encode(lines[1])));
    CHECK(lines[2].rfind("# algorithm=fast", 0) == 0);
}

TEST_CASE("cli solve: json output") {
    const CliResult res = run_cli(kSolve1 + " --witness --json");
    CHECK(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j.at("length") == 5);
    CHECK(j.at("witness").get<std::string>().size() == 5);
    CHECK(j.at("algorithm") == "fast");
    CHECK(j.at("swapped") == false);
    CHECK(j.at("cells_computed").get<std::uint64_t>() > 0);
    CHECK(j.at("time_ms").get<double>() >= 0.0);
}

TEST_CASE("cli solve: every algorithm, verified") {
    for (const char* algo : {"fast", "wang", "brute"}) {
        CAPTURE(algo);
        const CliResult res =
            run_cli(kSolve1 + " --algo " + algo + " --witness --verify --json");
        CHECK(res.exit_code == 0);
        CHECK(nlohmann::json::parse(res.out).at("length") == 5);
    }
    // the unconstrained length is larger
    const CliResult plain = run_cli(kSolve1 + " --algo lcs --witness --verify");
    CHECK(plain.exit_code == 0);
    const auto lines = lines_of(plain.out);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "6");
}

TEST_CASE("cli solve: file and fasta input") {
    const TempFile fa("streclcs_test_a.txt", std::string(ts::kEx1A) + "\n");
    const TempFile fb("streclcs_test_b.txt", std::string(ts::kEx1B) + "\n");
    const TempFile fp("streclcs_test_p.txt", std::string(ts::kEx1P) + "\n");
    const CliResult from_files = run_cli("solve --a-file " + fa.str() + " --b-file " +
                                         fb.str() + " --p-file " + fp.str());
    CHECK(from_files.exit_code == 0);
    CHECK(from_files.out == "5\n");

    const TempFile qa("streclcs_test_a.fa", ">first record\nabca\nbac\n>second\nzz\n");
    const TempFile qb("streclcs_test_b.fa", ">only\nacbca\nacbaa\n");
    const CliResult from_fasta =
        run_cli("solve --a-fasta " + qa.str() + " --b-fasta " + qb.str() + " --p abc");
    CHECK(from_fasta.exit_code == 0);
    CHECK(from_fasta.out == "5\n");
}

TEST_CASE("cli solve: invalid input exits 2") {
    // no pattern for a constrained solve
    CHECK(run_cli("solve --a ab --b ab").exit_code == 2);
    // more than one input source
    const TempFile fa("streclcs_test_conflict.txt", "ab\n");
    CHECK(run_cli("solve --a ab --b ab --p b --a-file " + fa.str() + " --b-file " +
                  fa.str())
              .exit_code == 2);
    // unknown algorithm is a parse error
    CHECK(run_cli("solve --a ab --b ab --p b --algo quantum").exit_code == 2);
    // missing file
    CHECK(run_cli("solve --a-file /nonexistent/x --b-file /nonexistent/y --p b")
              .exit_code == 2);
    // malformed FASTA
    const TempFile bad("streclcs_test_bad.fa", "no header line\n");
    CHECK(run_cli("solve --a-fasta " + bad.str() + " --b-fasta " + bad.str() + " --p b")
              .exit_code == 2);
    // no subcommand
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli solve: resource guards exit 4") {
    const std::string long_a(21, 'a');
    CHECK(run_cli("solve --a " + long_a + " --b " + long_a + " --p b --algo brute")
              .exit_code == 4);
    CHECK(run_cli(kSolve1 + " --algo wang --budget 10").exit_code == 4);
}

TEST_CASE("cli fuzz: deterministic digest and exit 0") {
    const std::string cmd = "fuzz --count 50 --max-m 6 --max-n 6 --max-r 3 --alphabet 2 "
                            "--seed 5 --json";
    const CliResult first = run_cli(cmd);
    CHECK(first.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(first.out);
    CHECK(j.at("passed") == true);
    CHECK(j.at("instances") == 50);
    const CliResult again = run_cli(cmd);
    CHECK(nlohmann::json::parse(again.out).at("digest") == j.at("digest"));

    CHECK(run_cli("fuzz --count 1 --max-m 30 --max-n 30").exit_code == 2);
}

TEST_CASE("cli bench: one json row per repetition") {
    const CliResult res =
        run_cli("bench --family random --m 64 --n 64 --r 3 --reps 2 --json");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 2);
    for (const std::string& line : lines) {
        const nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j.at("family") == "random");
        CHECK(j.at("cells_computed").get<std::uint64_t>() > 0);
        CHECK(j.contains("wang_ms"));   // small instance: cross-check ran
    }

    const CliResult quiet =
        run_cli("bench --family random --m 64 --n 64 --r 3 --reps 1 --json --no-wang");
    CHECK(quiet.exit_code == 0);
    CHECK_FALSE(nlohmann::json::parse(lines_of(quiet.out)[0]).contains("wang_ms"));

    CHECK(run_cli("bench --family no-such-family").exit_code == 2);
}

TEST_CASE("cli bench: sweep reports slopes") {
    const CliResult res = run_cli("bench --family random --r 3 --reps 1 --sweep "
                                  "--min-exp 6 --max-exp 8 --json");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 4);   // three sizes + summary
    const nlohmann::json summary = nlohmann::json::parse(lines.back());
    CHECK(summary.contains("cells_slope"));
    CHECK(summary.at("wang_table_slope").get<double>() == doctest::Approx(2.0).epsilon(0.05));

    // an unreachable slope limit turns the sweep into a failing check
    const CliResult gate = run_cli("bench --family random --r 3 --reps 1 --sweep "
                                   "--min-exp 6 --max-exp 7 --check-slope "
                                   "--slope-limit 0.01");
    CHECK(gate.exit_code == 3);
}
