#include "streclcs/core.hpp"

#include <algorithm>

namespace streclcs {

bool dp_step(DiagonalTable& table, const CodedString& a, const NextOcc& occ,
             const OverlapAutomaton& autom, std::size_t i, std::size_t s) {
    const std::uint32_t r = table.r();
    const Pos sentinel = table.sentinel();
    DiagonalTable::StepRow row = table.push_step();

    if (s == 0) {
        // The empty subsequence: contained in the empty prefix of b, overlap 0.
        row.values[0] = 0;
        for (std::uint32_t k = 1; k < r; ++k) row.values[k] = sentinel;
        return true;
    }

    bool any = false;
    for (std::uint32_t k = 0; k < r; ++k) {
        const Pos v = table.value_at(i - 1, s, k);
        row.values[k] = v;
        if (row.back) row.back[k] = v < sentinel ? BackRef::carry() : BackRef::unset();
        if (v < sentinel) any = true;
    }

    const Code alpha = a[i - 1];
    for (std::uint32_t t = 0; t < r; ++t) {
        const Pos v = table.value_at(i - 1, s - 1, t);
        if (v >= sentinel) continue;
        const Pos j = occ.query(v + 1, alpha);
        if (j >= sentinel) continue;
        const Code k2 = autom.step(t, alpha);
        if (k2 >= r) continue;   // appending a[i] here would complete the pattern
        if (j < row.values[k2]) {
            row.values[k2] = j;
            if (row.back) row.back[k2] = BackRef::extend(t);
            any = true;
        }
    }
    return any;
}

std::pair<DiagonalTable, DpStats> run_diagonals(const ProblemInstance& instance,
                                                const NextOcc& occ,
                                                const OverlapAutomaton& autom,
                                                bool with_backrefs) {
    const std::size_t m = instance.m();
    const std::uint32_t r = static_cast<std::uint32_t>(instance.r());
    assert(r >= 1);
    DiagonalTable table(m, static_cast<Pos>(instance.n()), r, with_backrefs);
    DpStats stats;
    for (std::size_t c = 0; c <= m; ++c) {
        if (m - c <= stats.best_length) break;   // too short to reach a new best row
        table.open_diagonal();
        ++stats.diagonals_opened;
        for (std::size_t s = 0; c + s <= m; ++s) {
            const bool alive = dp_step(table, instance.a, occ, autom, c + s, s);
            stats.cells_computed += r;
            if (!alive) break;
            if (s > stats.best_length) stats.best_length = s;
        }
    }
    assert(stats.cells_computed >= stats.best_length * r);
    return {std::move(table), stats};
}

CodedString backtrack(const DiagonalTable& table, const CodedString& a, std::size_t length) {
    CodedString out;
    if (length == 0) return out;
    assert(table.with_backrefs());
    const Pos sentinel = table.sentinel();
    const std::uint32_t r = table.r();

    std::size_t best_i = 0;
    std::uint32_t best_k = 0;
    Pos best_v = sentinel;
    for (std::size_t c = 0; c < table.diagonal_count(); ++c) {
        if (length >= table.depth(c)) continue;   // this diagonal never reached the row
        const std::size_t i = c + length;
        for (std::uint32_t k = 0; k < r; ++k) {
            const Pos v = table.value_at(i, length, k);
            if (v < best_v) {
                best_v = v;
                best_i = i;
                best_k = k;
            }
        }
    }
    assert(best_v < sentinel && "no cell on the requested row");

    std::size_t i = best_i;
    std::size_t s = length;
    std::uint32_t k = best_k;
    out.reserve(length);
    while (s > 0) {
        const BackRef ref = table.back_at(i, s, k);
        assert(!ref.is_unset());
        if (ref.is_extend()) {
            out.push_back(a[i - 1]);
            k = ref.extend_state();
            --s;
        }
        // a Carry keeps both s and k
        --i;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

SolveResult solve(const ProblemInstance& instance, bool want_witness) {
    assert(instance.r() >= 1);
    const NextOcc occ = build_next_occ(instance.b, instance.sigma_size);
    const OverlapAutomaton autom = build_overlap_automaton(instance.p, instance.alphabet_size);
    auto [table, stats] = run_diagonals(instance, occ, autom, want_witness);
    SolveResult result;
    result.length = stats.best_length;
    result.stats = stats;
    if (want_witness) result.witness = backtrack(table, instance.a, result.length);
    return result;
}

}  // namespace streclcs
