#include "streclcs/next_tables.hpp"

#include <algorithm>

namespace streclcs {

NextOcc build_next_occ(const CodedString& b, Code sigma_size) {
    NextOcc occ;
    occ.n = static_cast<Pos>(b.size());
    occ.sigma = sigma_size;
    occ.table.assign(static_cast<std::size_t>(occ.n + 2) * sigma_size, 0);
    if (sigma_size == 0) return occ;
    const Pos none = occ.n + 1;
    Pos* bottom = occ.table.data() + static_cast<std::size_t>(occ.n + 1) * sigma_size;
    std::fill(bottom, bottom + sigma_size, none);
    for (Pos j = occ.n; j >= 1; --j) {
        Pos* row = occ.table.data() + static_cast<std::size_t>(j) * sigma_size;
        std::copy(row + sigma_size, row + 2 * sigma_size, row);
        assert(b[j - 1] >= 1 && b[j - 1] <= sigma_size);
        row[b[j - 1] - 1] = j;
    }
    return occ;
}

std::vector<std::int32_t> build_failure(const CodedString& p) {
    assert(!p.empty());
    const std::size_t r = p.size();
    std::vector<std::int32_t> fail(r + 1);
    fail[0] = -1;
    fail[1] = 0;
    std::int32_t k = 0;
    for (std::size_t i = 2; i <= r; ++i) {
        while (k >= 0 && p[static_cast<std::size_t>(k)] != p[i - 1]) {
            k = fail[static_cast<std::size_t>(k)];
        }
        ++k;
        fail[i] = k;
    }
    return fail;
}

OverlapAutomaton build_overlap_automaton(const CodedString& p, Code alphabet_size) {
    assert(!p.empty());
    OverlapAutomaton autom;
    autom.r = static_cast<std::uint32_t>(p.size());
    autom.alphabet = alphabet_size;
    autom.failure = build_failure(p);
    autom.delta.assign(static_cast<std::size_t>(autom.r) * alphabet_size, 0);
    assert(p[0] >= 1 && p[0] <= alphabet_size);
    autom.delta[p[0] - 1] = 1;   // row 0: only the first pattern character advances
    for (std::uint32_t t = 1; t < autom.r; ++t) {
        Code* row = autom.delta.data() + static_cast<std::size_t>(t) * alphabet_size;
        const Code* fallback =
            autom.delta.data() + static_cast<std::size_t>(autom.failure[t]) * alphabet_size;
        std::copy(fallback, fallback + alphabet_size, row);
        assert(p[t] >= 1 && p[t] <= alphabet_size);
        row[p[t] - 1] = t + 1;
    }
    return autom;
}

}  // namespace streclcs
