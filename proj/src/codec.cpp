#include "streclcs/codec.hpp"

#include <algorithm>
#include <unordered_set>

namespace streclcs {

CodedString Codec::encode(std::string_view s) const {
    CodedString out;
    out.reserve(s.size());
    for (char ch : s) {
        Code c = code_of(ch);
        assert(c != 0 && "character has no code in this codec");
        out.push_back(c);
    }
    return out;
}

std::string Codec::decode(const CodedString& z) const {
    std::string out;
    out.reserve(z.size());
    for (Code c : z) {
        assert(c >= 1 && c <= alphabet_size());
        out.push_back(backward[c - 1]);
    }
    return out;
}

Codec build_codec(std::string_view a_raw, std::string_view b_raw, std::string_view p_raw) {
    Codec codec;
    std::unordered_set<char> in_b(b_raw.begin(), b_raw.end());
    for (char ch : a_raw) {
        if (in_b.count(ch) && !codec.forward.count(ch)) {
            codec.backward.push_back(ch);
            codec.forward.emplace(ch, static_cast<Code>(codec.backward.size()));
        }
    }
    codec.sigma_size = static_cast<Code>(codec.backward.size());
    for (char ch : p_raw) {
        if (!codec.forward.count(ch)) {
            codec.backward.push_back(ch);
            codec.forward.emplace(ch, static_cast<Code>(codec.backward.size()));
        }
    }
    return codec;
}

ProblemInstance encode_instance(std::string_view a_raw, std::string_view b_raw,
                                std::string_view p_raw, const Codec& codec) {
    if (p_raw.empty()) throw EmptyPatternError();
    ProblemInstance inst;
    inst.sigma_size = codec.sigma_size;
    inst.alphabet_size = codec.alphabet_size();
    auto filter_encode = [&codec](std::string_view s) {
        CodedString out;
        out.reserve(s.size());
        for (char ch : s) {
            Code c = codec.code_of(ch);
            if (c >= 1 && c <= codec.sigma_size) out.push_back(c);
        }
        return out;
    };
    inst.a = filter_encode(a_raw);
    inst.b = filter_encode(b_raw);
    inst.p = codec.encode(p_raw);
    inst.original_a.assign(a_raw.begin(), a_raw.end());
    inst.original_b.assign(b_raw.begin(), b_raw.end());
    if (inst.a.size() > inst.b.size()) {
        std::swap(inst.a, inst.b);
        inst.swapped = true;
    }
    return inst;
}

EncodedProblem encode_problem(std::string_view a_raw, std::string_view b_raw,
                              std::string_view p_raw) {
    EncodedProblem enc;
    enc.codec = build_codec(a_raw, b_raw, p_raw);
    enc.instance = encode_instance(a_raw, b_raw, p_raw, enc.codec);
    return enc;
}

bool validate_witness(const ProblemInstance& instance, const CodedString& z) {
    assert(instance.r() >= 1);
    if (!is_subsequence(z, instance.a) || !is_subsequence(z, instance.b)) return false;
    return !contains_substring(z, instance.p);
}

}  // namespace streclcs
