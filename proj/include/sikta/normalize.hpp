#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sikta {

enum class DigitPolicy { kKeep, kDrop };

// Text normalization applied before every metric. Deterministic and
// idempotent: normalize(normalize(t)) == normalize(t).
struct NormProfile {
    bool lowercase = true;
    bool strip_punctuation = true;
    bool collapse_whitespace = true;
    DigitPolicy digit_policy = DigitPolicy::kKeep;
};

std::string normalize(std::string_view text, const NormProfile& profile);

// UTF-8 decode to code points. Invalid byte sequences become U+FFFD.
std::vector<uint32_t> decode_utf8(std::string_view text);

std::string encode_utf8(const std::vector<uint32_t>& cps);

// Whitespace-separated words of an already-normalized string.
std::vector<std::string_view> split_words(std::string_view text);

// Code points of an already-normalized string, inter-word spaces included.
std::vector<uint32_t> split_chars(std::string_view text);

} // namespace sikta
