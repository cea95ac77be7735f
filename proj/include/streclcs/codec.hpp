#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace streclcs {

using Code = std::uint32_t;
using CodedString = std::vector<Code>;

// The empty string is a substring of every string, so an empty forbidden
// pattern admits no answer at all.
class EmptyPatternError : public std::invalid_argument {
public:
    EmptyPatternError() : std::invalid_argument("forbidden pattern is empty") {}
};

/*
 * Dense recoding of raw input characters. Codes 1..sigma_size are the
 * characters occurring in both A and B, assigned in order of first occurrence
 * in A. Characters occurring only in the pattern get distinct codes above
 * sigma_size; they can never match anything in the filtered inputs.
 */
struct Codec {
    std::unordered_map<char, Code> forward;
    std::vector<char> backward;   // backward[c - 1] is the character for code c
    Code sigma_size = 0;

    Code alphabet_size() const { return static_cast<Code>(backward.size()); }

    // Code for a character, 0 if the character has none.
    Code code_of(char ch) const {
        auto it = forward.find(ch);
        return it == forward.end() ? 0 : it->second;
    }

    // Encodes a string whose characters all have codes.
    CodedString encode(std::string_view s) const;
    std::string decode(const CodedString& z) const;
};

Codec build_codec(std::string_view a_raw, std::string_view b_raw, std::string_view p_raw);

/*
 * A normalized problem: both inputs filtered down to the shared alphabet and
 * coded, the pattern coded in full, and the pair swapped if needed so that
 * the first string is the shorter one.
 */
struct ProblemInstance {
    CodedString a;                 // shorter filtered input, codes in [1, sigma_size]
    CodedString b;                 // longer filtered input
    CodedString p;                 // full pattern, codes in [1, alphabet_size]
    Code sigma_size = 0;
    Code alphabet_size = 0;
    bool swapped = false;          // true if the inputs were exchanged to get |a| <= |b|
    std::string original_a;
    std::string original_b;

    std::size_t m() const { return a.size(); }
    std::size_t n() const { return b.size(); }
    std::size_t r() const { return p.size(); }
};

// Throws EmptyPatternError if p_raw is empty. The codec must have been built
// from the same raw inputs.
ProblemInstance encode_instance(std::string_view a_raw, std::string_view b_raw,
                                std::string_view p_raw, const Codec& codec);

struct EncodedProblem {
    Codec codec;
    ProblemInstance instance;
};

EncodedProblem encode_problem(std::string_view a_raw, std::string_view b_raw,
                              std::string_view p_raw);

// Greedy scan: true iff z can be obtained from s by deleting characters.
inline bool is_subsequence(const CodedString& z, const CodedString& s) {
    std::size_t i = 0;
    for (Code c : s) {
        if (i < z.size() && z[i] == c) ++i;
    }
    return i == z.size();
}

inline bool contains_substring(const CodedString& s, const CodedString& pat) {
    if (pat.empty()) return true;
    if (pat.size() > s.size()) return false;
    for (std::size_t i = 0; i + pat.size() <= s.size(); ++i) {
        std::size_t j = 0;
        while (j < pat.size() && s[i + j] == pat[j]) ++j;
        if (j == pat.size()) return true;
    }
    return false;
}

// True iff z is a common subsequence of the coded inputs and does not contain
// the pattern as a substring.
bool validate_witness(const ProblemInstance& instance, const CodedString& z);

}  // namespace streclcs
