#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "streclcs/codec.hpp"

namespace streclcs {

using Pos = std::uint32_t;

/*
 * Leftmost-occurrence table over B: query(j, alpha) is the smallest position
 * q >= j with B[q] = alpha, or n+1 if there is none. Positions are 1-based;
 * row n+1 answers queries past the end of B.
 */
struct NextOcc {
    std::vector<Pos> table;   // rows j = 0..n+1 (row 0 unused), alphabet minor axis
    Pos n = 0;
    Code sigma = 0;

    Pos query(Pos j, Code alpha) const {
        assert(j >= 1 && j <= n + 1);
        assert(alpha >= 1 && alpha <= sigma);
        return table[static_cast<std::size_t>(j) * sigma + (alpha - 1)];
    }
};

// One right-to-left pass over b; O(n * sigma) time and space.
NextOcc build_next_occ(const CodedString& b, Code sigma_size);

// Failure array for the 1-based pattern: failure[i] is the length of the
// longest proper border of P[1..i]; failure[0] = -1.
std::vector<std::int32_t> build_failure(const CodedString& p);

/*
 * Transition table over pattern-prefix states: step(t, alpha) is the length
 * of the longest prefix of P that is a suffix of P[1..t] followed by alpha.
 * A result of r signals that alpha would complete an occurrence of P.
 */
struct OverlapAutomaton {
    std::vector<std::int32_t> failure;   // failure(0..r)
    std::vector<Code> delta;             // rows t = 0..r-1, alphabet minor axis
    std::uint32_t r = 0;
    Code alphabet = 0;

    Code step(Code t, Code alpha) const {
        assert(t < r);
        assert(alpha >= 1 && alpha <= alphabet);
        return delta[static_cast<std::size_t>(t) * alphabet + (alpha - 1)];
    }
};

// The alphabet axis must cover every code that can be fed to step(); the
// pattern itself may use codes above the shared-alphabet size.
OverlapAutomaton build_overlap_automaton(const CodedString& p, Code alphabet_size);

}  // namespace streclcs
