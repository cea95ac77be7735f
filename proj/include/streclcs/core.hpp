#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "streclcs/codec.hpp"
#include "streclcs/next_tables.hpp"

namespace streclcs {

/*
 * Provenance of one table entry, kept for witness reconstruction.
 *   Carry:     the value was inherited from d(i-1, s, k).
 *   Extend(t): the value came from matching a[i] after a cell with overlap t.
 */
class BackRef {
public:
    static BackRef unset() { return BackRef(-2); }
    static BackRef carry() { return BackRef(-1); }
    static BackRef extend(std::uint32_t t) { return BackRef(static_cast<std::int32_t>(t)); }

    bool is_unset() const { return raw_ == -2; }
    bool is_carry() const { return raw_ == -1; }
    bool is_extend() const { return raw_ >= 0; }
    std::uint32_t extend_state() const {
        assert(is_extend());
        return static_cast<std::uint32_t>(raw_);
    }

    friend bool operator==(BackRef x, BackRef y) { return x.raw_ == y.raw_; }
    friend bool operator!=(BackRef x, BackRef y) { return x.raw_ != y.raw_; }

private:
    explicit BackRef(std::int32_t raw) : raw_(raw) {}
    std::int32_t raw_;
};

/*
 * Sparse storage for the table d(i, s, k): the length of the shortest prefix
 * of b admitting a common subsequence of a[1..i] of length s that avoids the
 * pattern and ends with pattern-prefix overlap k. Cells live on diagonals
 * c = i - s; each diagonal is a growable array of steps (one step = r values,
 * plus r backrefs when requested) whose capacity doubles as it fills. Any
 * absent cell reads as the sentinel n+1.
 */
class DiagonalTable {
public:
    DiagonalTable(std::size_t m, Pos n, std::uint32_t r, bool with_backrefs)
        : m_(m), n_(n), r_(r), sentinel_(n + 1), with_backrefs_(with_backrefs) {
        assert(r >= 1);
    }

    std::size_t m() const { return m_; }
    Pos n() const { return n_; }
    std::uint32_t r() const { return r_; }
    Pos sentinel() const { return sentinel_; }
    bool with_backrefs() const { return with_backrefs_; }

    std::size_t diagonal_count() const { return diags_.size(); }

    // Number of steps stored on diagonal c (depths 0..depth-1).
    std::size_t depth(std::size_t c) const {
        assert(c < diags_.size());
        return diags_[c].steps;
    }

    Pos value_at(std::size_t i, std::size_t s, std::uint32_t k) const {
        assert(k < r_);
        if (s > i || i > m_) return sentinel_;
        const std::size_t c = i - s;
        if (c >= diags_.size() || s >= diags_[c].steps) return sentinel_;
        return diags_[c].values[s * r_ + k];
    }

    BackRef back_at(std::size_t i, std::size_t s, std::uint32_t k) const {
        assert(with_backrefs_);
        assert(k < r_);
        if (s > i || i > m_) return BackRef::unset();
        const std::size_t c = i - s;
        if (c >= diags_.size() || s >= diags_[c].steps) return BackRef::unset();
        return diags_[c].back[s * r_ + k];
    }

    void open_diagonal() { diags_.emplace_back(); }

    struct StepRow {
        Pos* values;
        BackRef* back;   // null when backrefs are off
    };

    // Appends one step to the newest diagonal. Capacity grows by doubling.
    StepRow push_step() {
        assert(!diags_.empty());
        Diagonal& d = diags_.back();
        if (d.steps == d.capacity) {
            d.capacity = d.capacity == 0 ? 1 : d.capacity * 2;
            d.values.resize(d.capacity * r_, sentinel_);
            if (with_backrefs_) d.back.resize(d.capacity * r_, BackRef::unset());
        }
        const std::size_t at = d.steps++ * r_;
        return {d.values.data() + at, with_backrefs_ ? d.back.data() + at : nullptr};
    }

private:
    struct Diagonal {
        std::vector<Pos> values;
        std::vector<BackRef> back;
        std::size_t steps = 0;
        std::size_t capacity = 0;
    };

    std::size_t m_;
    Pos n_;
    std::uint32_t r_;
    Pos sentinel_;
    bool with_backrefs_;
    std::vector<Diagonal> diags_;
};

struct DpStats {
    std::uint64_t cells_computed = 0;   // steps executed times r
    std::size_t diagonals_opened = 0;
    std::size_t best_length = 0;
};

struct SolveResult {
    std::size_t length = 0;
    std::optional<CodedString> witness;   // present when requested
    DpStats stats;
};

/*
 * Computes the cell for step (i, s) and appends it to diagonal i - s, which
 * must be the newest one with exactly s steps already stored. Every entry k
 * starts as the inherited d(i-1, s, k); then each overlap state t of
 * d(i-1, s-1, .) proposes the leftmost match of a[i] past that prefix, and
 * the proposal lands at the state reached by feeding a[i] to the automaton,
 * kept only on strict improvement and never when it would complete the
 * pattern. Returns true if any entry of the new cell is non-sentinel.
 */
bool dp_step(DiagonalTable& table, const CodedString& a, const NextOcc& occ,
             const OverlapAutomaton& autom, std::size_t i, std::size_t s);

/*
 * Runs the whole table diagonal by diagonal. A diagonal c is opened only
 * while m - c exceeds the best length found so far (later diagonals are too
 * short to improve it), and stops at its first all-sentinel step (deeper
 * cells on it would be all-sentinel too).
 */
std::pair<DiagonalTable, DpStats> run_diagonals(const ProblemInstance& instance,
                                                const NextOcc& occ,
                                                const OverlapAutomaton& autom,
                                                bool with_backrefs);

/*
 * Reconstructs one witness of the given length. The start cell is the one
 * with the smallest table value on row `length`, ties broken by smaller i,
 * then smaller k; the walk follows backrefs and emits a[i] on each Extend.
 */
CodedString backtrack(const DiagonalTable& table, const CodedString& a, std::size_t length);

// Builds the lookup tables, runs the diagonals, and optionally backtracks.
SolveResult solve(const ProblemInstance& instance, bool want_witness = false);

}  // namespace streclcs
