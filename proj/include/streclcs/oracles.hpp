#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "streclcs/codec.hpp"
#include "streclcs/next_tables.hpp"

namespace streclcs {

class InstanceTooLargeError : public std::runtime_error {
public:
    InstanceTooLargeError()
        : std::runtime_error("instance too large for exhaustive enumeration") {}
};

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError() : std::runtime_error("table budget exceeded") {}
};

struct OracleResult {
    std::size_t length = 0;
    CodedString witness;
    std::uint64_t work = 0;   // subsets examined / table entries computed
};

// Largest min(m, n) accepted by the exhaustive solver.
inline constexpr std::size_t kBruteForceLimit = 20;

/*
 * Ground truth by enumeration: every subsequence of the shorter input is
 * tested for being a subsequence of the longer one and for avoiding the
 * pattern. Returns a maximum-length survivor, the lexicographically smallest
 * one among ties. Throws InstanceTooLargeError when min(m, n) > 20.
 */
OracleResult brute_force_streclcs(const ProblemInstance& instance);

struct WangOptions {
    std::uint64_t budget = 100000000;   // max m*n*r table entries
    bool want_witness = true;
};

/*
 * Cubic reference: f(i, j, k) is the length of the longest common subsequence
 * of a[1..i] and b[1..j] that avoids the pattern and ends with pattern-prefix
 * overlap exactly k. Carries from (i-1, j) and (i, j-1) always apply; a match
 * a[i] = b[j] extends every state t whose automaton step lands on k without
 * completing the pattern. Unreachable states hold a marker distinct from 0.
 * Throws BudgetExceededError when m*n*r exceeds the budget.
 */
OracleResult wang_dp(const ProblemInstance& instance, const WangOptions& options = {});

struct LcsResult {
    std::size_t length = 0;
    CodedString witness;
    std::uint64_t cells = 0;
};

/*
 * Plain (unconstrained) LCS via the shortest-prefix table e(i, s): the length
 * of the shortest prefix of b containing a common subsequence of a[1..i] of
 * length s. Uses the same diagonal layout and pruning as the main solver but
 * with no pattern state.
 */
class NakatsuSolver {
public:
    NakatsuSolver(const CodedString& a, const CodedString& b);

    std::size_t length() const { return best_; }
    std::uint64_t cells() const { return cells_; }
    std::size_t diagonals_opened() const { return diags_.size(); }
    Pos sentinel() const { return sentinel_; }

    // Number of cells stored on diagonal c (rows 0..depth-1).
    std::size_t depth(std::size_t c) const {
        assert(c < diags_.size());
        return diags_[c].size();
    }

    // e(i, s); absent cells read as the sentinel n+1.
    Pos e_at(std::size_t i, std::size_t s) const {
        if (s > i || i > m_) return sentinel_;
        const std::size_t c = i - s;
        if (c >= diags_.size() || s >= diags_[c].size()) return sentinel_;
        return diags_[c][s];
    }

    CodedString witness() const;

private:
    std::size_t m_ = 0;
    Pos sentinel_ = 1;
    std::size_t best_ = 0;
    std::uint64_t cells_ = 0;
    CodedString a_;
    std::vector<std::vector<Pos>> diags_;
    std::vector<std::vector<std::uint8_t>> backs_;   // 0 unset, 1 carry, 2 extend
};

LcsResult nakatsu_lcs(const CodedString& a, const CodedString& b);

}  // namespace streclcs
