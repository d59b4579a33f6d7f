#include "sikta/normalize.hpp"

namespace sikta {

namespace {

constexpr uint32_t kReplacement = 0xFFFD;

bool is_space_cp(uint32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

// Punctuation and ornament code points removed by strip_punctuation.
// Covers ASCII, Latin-1 punctuation and the general punctuation block;
// letters and marks are never touched.
bool is_punct_cp(uint32_t cp) {
    if (cp < 0x80) {
        return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
               (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
    }
    switch (cp) {
        case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB:
        case 0xBF: case 0xD7: case 0xF7: case 0xB4: case 0xA8:
            return true;
        default:
            return (cp >= 0x2010 && cp <= 0x205E) || cp == 0x2212;
    }
}

bool is_digit_cp(uint32_t cp) {
    return cp >= '0' && cp <= '9';
}

// Lowercasing over ASCII, Latin-1 Supplement and Latin Extended-A, which
// covers the Nordic alphabets this toolkit targets. Other scripts pass
// through unchanged.
uint32_t to_lower_cp(uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp >= 0x100 && cp <= 0x137) return (cp | 1u);
    if (cp >= 0x139 && cp <= 0x148) return ((cp - 1) | 1u) + 1u;
    if (cp >= 0x14A && cp <= 0x177) return (cp | 1u);
    if (cp == 0x178) return 0xFF;
    if (cp >= 0x179 && cp <= 0x17E) return ((cp - 1) | 1u) + 1u;
    return cp;
}

} // namespace

std::vector<uint32_t> decode_utf8(std::string_view text) {
    std::vector<uint32_t> out;
    out.reserve(text.size());
    size_t i = 0;
    const size_t len = text.size();
    while (i < len) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        uint32_t cp = 0;
        size_t extra = 0;
        if (c < 0x80) {
            cp = c;
        } else if ((c & 0xE0) == 0xC0) {
            cp = c & 0x1F;
            extra = 1;
        } else if ((c & 0xF0) == 0xE0) {
            cp = c & 0x0F;
            extra = 2;
        } else if ((c & 0xF8) == 0xF0) {
            cp = c & 0x07;
            extra = 3;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + extra >= len) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (size_t k = 1; k <= extra; ++k) {
            const unsigned char cc = static_cast<unsigned char>(text[i + k]);
            if ((cc & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string encode_utf8(const std::vector<uint32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (uint32_t cp : cps) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::string normalize(std::string_view text, const NormProfile& profile) {
    std::vector<uint32_t> cps = decode_utf8(text);
    std::vector<uint32_t> out;
    out.reserve(cps.size());

    for (uint32_t cp : cps) {
        if (profile.lowercase) cp = to_lower_cp(cp);
        // Stripped characters become separators so that "ord,ord" splits
        // into two words instead of fusing.
        if (profile.strip_punctuation && is_punct_cp(cp)) cp = ' ';
        if (profile.digit_policy == DigitPolicy::kDrop && is_digit_cp(cp)) cp = ' ';
        out.push_back(cp);
    }

    if (profile.collapse_whitespace) {
        std::vector<uint32_t> collapsed;
        collapsed.reserve(out.size());
        bool pending_space = false;
        for (uint32_t cp : out) {
            if (is_space_cp(cp)) {
                pending_space = !collapsed.empty();
            } else {
                if (pending_space) collapsed.push_back(' ');
                pending_space = false;
                collapsed.push_back(cp);
            }
        }
        out = std::move(collapsed);
    }
    return encode_utf8(out);
}

std::vector<std::string_view> split_words(std::string_view text) {
    std::vector<std::string_view> words;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
        size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' && text[i] != '\r') ++i;
        if (i > start) words.push_back(text.substr(start, i - start));
    }
    return words;
}

std::vector<uint32_t> split_chars(std::string_view text) {
    return decode_utf8(text);
}

} // namespace sikta
