#include "streclcs/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace streclcs {

OracleResult brute_force_streclcs(const ProblemInstance& instance) {
    const std::size_t m = instance.m();
    if (std::min(m, instance.n()) > kBruteForceLimit) throw InstanceTooLargeError();
    assert(m <= instance.n());   // instances are normalized so a is the shorter side

    const CodedString& a = instance.a;
    OracleResult best;   // empty witness is always valid: the pattern is nonempty
    const std::uint64_t masks = std::uint64_t{1} << m;
    CodedString z;
    z.reserve(m);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) < best.length) continue;
        z.clear();
        for (std::size_t idx = 0; idx < m; ++idx) {
            if (mask >> idx & 1) z.push_back(a[idx]);
        }
        if (!is_subsequence(z, instance.b)) continue;
        if (contains_substring(z, instance.p)) continue;
        if (z.size() > best.length ||
            (z.size() == best.length &&
             std::lexicographical_compare(z.begin(), z.end(), best.witness.begin(),
                                          best.witness.end()))) {
            best.length = z.size();
            best.witness = z;
        }
    }
    best.work = masks;
    return best;
}

namespace {

constexpr std::int32_t kUnreachable = -1;

// States t grouped by where the automaton sends them on each character;
// transitions that would complete the pattern are dropped.
std::vector<std::vector<std::uint32_t>> build_predecessors(const OverlapAutomaton& autom,
                                                           Code sigma) {
    const std::uint32_t r = autom.r;
    std::vector<std::vector<std::uint32_t>> pred(static_cast<std::size_t>(sigma) * r);
    for (Code alpha = 1; alpha <= sigma; ++alpha) {
        for (std::uint32_t t = 0; t < r; ++t) {
            const Code k2 = autom.step(t, alpha);
            if (k2 < r) pred[static_cast<std::size_t>(alpha - 1) * r + k2].push_back(t);
        }
    }
    return pred;
}

}  // namespace

OracleResult wang_dp(const ProblemInstance& instance, const WangOptions& options) {
    const std::size_t m = instance.m();
    const std::size_t n = instance.n();
    const std::size_t r = instance.r();
    assert(r >= 1);
    const std::uint64_t work =
        static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n) * r;
    if (work > options.budget) throw BudgetExceededError();

    const OverlapAutomaton autom = build_overlap_automaton(instance.p, instance.alphabet_size);
    const auto pred = build_predecessors(autom, instance.sigma_size);
    const CodedString& a = instance.a;
    const CodedString& b = instance.b;

    const std::size_t plane = (n + 1) * r;
    auto fill_boundary = [&](std::int32_t* layer) {
        for (std::size_t j = 0; j <= n; ++j) {
            layer[j * r] = 0;
            for (std::size_t k = 1; k < r; ++k) layer[j * r + k] = kUnreachable;
        }
    };
    auto compute_row = [&](const std::int32_t* prev, std::int32_t* cur, std::size_t i) {
        cur[0] = 0;
        for (std::size_t k = 1; k < r; ++k) cur[k] = kUnreachable;
        const Code ai = a[i - 1];
        for (std::size_t j = 1; j <= n; ++j) {
            const std::int32_t* up = prev + j * r;
            const std::int32_t* left = cur + (j - 1) * r;
            std::int32_t* out = cur + j * r;
            const bool match = ai == b[j - 1];
            const std::int32_t* diag = prev + (j - 1) * r;
            for (std::size_t k = 0; k < r; ++k) {
                std::int32_t v = std::max(up[k], left[k]);
                if (match) {
                    for (std::uint32_t t : pred[static_cast<std::size_t>(ai - 1) * r + k]) {
                        const std::int32_t pv = diag[t];
                        if (pv >= 0 && pv + 1 > v) v = pv + 1;
                    }
                }
                out[k] = v;
            }
        }
    };

    OracleResult result;
    result.work = work;

    if (!options.want_witness) {
        std::vector<std::int32_t> prev(plane), cur(plane);
        fill_boundary(prev.data());
        for (std::size_t i = 1; i <= m; ++i) {
            compute_row(prev.data(), cur.data(), i);
            std::swap(prev, cur);
        }
        std::int32_t best = 0;
        for (std::size_t k = 0; k < r; ++k) best = std::max(best, prev[n * r + k]);
        result.length = static_cast<std::size_t>(best);
        return result;
    }

    std::vector<std::int32_t> f((m + 1) * plane);
    fill_boundary(f.data());
    for (std::size_t i = 1; i <= m; ++i) {
        compute_row(f.data() + (i - 1) * plane, f.data() + i * plane, i);
    }
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) {
        return f[i * plane + j * r + k];
    };

    std::int32_t best = 0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < r; ++k) {
        if (at(m, n, k) > best) {
            best = at(m, n, k);
            best_k = k;
        }
    }
    result.length = static_cast<std::size_t>(best);

    CodedString w;
    w.reserve(result.length);
    std::size_t i = m, j = n, k = best_k;
    while (i > 0 && j > 0) {
        const std::int32_t v = at(i, j, k);
        if (v <= 0) break;
        if (at(i - 1, j, k) == v) {
            --i;
        } else if (at(i, j - 1, k) == v) {
            --j;
        } else {
            assert(a[i - 1] == b[j - 1]);
            const Code alpha = a[i - 1];
            bool moved = false;
            for (std::uint32_t t : pred[static_cast<std::size_t>(alpha - 1) * r + k]) {
                if (at(i - 1, j - 1, t) == v - 1) {
                    w.push_back(alpha);
                    k = t;
                    moved = true;
                    break;
                }
            }
            assert(moved);
            (void)moved;
            --i;
            --j;
        }
    }
    std::reverse(w.begin(), w.end());
    assert(w.size() == result.length);
    result.witness = std::move(w);
    return result;
}

NakatsuSolver::NakatsuSolver(const CodedString& a, const CodedString& b)
    : m_(a.size()), sentinel_(static_cast<Pos>(b.size()) + 1), a_(a) {
    Code alphabet = 0;
    for (Code c : a) alphabet = std::max(alphabet, c);
    for (Code c : b) alphabet = std::max(alphabet, c);
    const NextOcc occ = build_next_occ(b, alphabet);

    for (std::size_t c = 0; c <= m_; ++c) {
        if (m_ - c <= best_) break;
        diags_.emplace_back();
        backs_.emplace_back();
        std::vector<Pos>& dv = diags_.back();
        std::vector<std::uint8_t>& db = backs_.back();
        for (std::size_t s = 0; c + s <= m_; ++s) {
            Pos v;
            std::uint8_t bk;
            if (s == 0) {
                v = 0;
                bk = 0;
            } else {
                v = e_at(c + s - 1, s);
                bk = v < sentinel_ ? std::uint8_t{1} : std::uint8_t{0};
                const Pos pv = dv[s - 1];
                if (pv < sentinel_) {
                    const Pos j = occ.query(pv + 1, a[c + s - 1]);
                    if (j < v) {
                        v = j;
                        bk = 2;
                    }
                }
            }
            dv.push_back(v);
            db.push_back(bk);
            ++cells_;
            if (v >= sentinel_) break;
            if (s > best_) best_ = s;
        }
    }
}

CodedString NakatsuSolver::witness() const {
    CodedString out;
    if (best_ == 0) return out;
    std::size_t best_i = 0;
    Pos best_v = sentinel_;
    for (std::size_t c = 0; c < diags_.size(); ++c) {
        if (best_ >= diags_[c].size()) continue;
        const std::size_t i = c + best_;
        const Pos v = diags_[c][best_];
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    assert(best_v < sentinel_);
    std::size_t i = best_i;
    std::size_t s = best_;
    out.reserve(best_);
    while (s > 0) {
        const std::uint8_t bk = backs_[i - s][s];
        assert(bk != 0);
        if (bk == 2) {
            out.push_back(a_[i - 1]);
            --s;
        }
        --i;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

LcsResult nakatsu_lcs(const CodedString& a, const CodedString& b) {
    NakatsuSolver solver(a, b);
    LcsResult result;
    result.length = solver.length();
    result.witness = solver.witness();
    result.cells = solver.cells();
    return result;
}

}  // namespace streclcs
