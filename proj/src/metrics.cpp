#include "sikta/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "sikta/errors.hpp"
#include "sikta/kernels/edit_distance.hpp"

namespace sikta {

namespace {

// Interns word tokens of both texts into one id space so the generic
// u32 kernel can run on them.
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> intern_words(
    std::string_view norm_a, std::string_view norm_b) {
    std::unordered_map<std::string_view, uint32_t> ids;
    auto intern = [&](std::string_view text) {
        std::vector<uint32_t> out;
        for (std::string_view w : split_words(text)) {
            auto [it, inserted] = ids.emplace(w, static_cast<uint32_t>(ids.size()));
            (void)inserted;
            out.push_back(it->second);
        }
        return out;
    };
    auto a = intern(norm_a);
    auto b = intern(norm_b);
    return {std::move(a), std::move(b)};
}

uint32_t char_distance(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    return kernels::edit_distance(a, b);
}

// n-gram multiset counts keyed by the token window.
using NgramCounts = std::map<std::vector<uint32_t>, uint32_t>;

NgramCounts count_ngrams(const std::vector<uint32_t>& tokens, int n) {
    NgramCounts counts;
    if (n <= 0 || tokens.size() < static_cast<size_t>(n)) return counts;
    for (size_t i = 0; i + static_cast<size_t>(n) <= tokens.size(); ++i) {
        std::vector<uint32_t> gram(tokens.begin() + static_cast<long>(i),
                                   tokens.begin() + static_cast<long>(i) + n);
        ++counts[gram];
    }
    return counts;
}

uint64_t clipped_matches(const NgramCounts& candidate, const NgramCounts& against) {
    uint64_t matched = 0;
    for (const auto& [gram, count] : candidate) {
        auto it = against.find(gram);
        if (it != against.end()) matched += std::min(count, it->second);
    }
    return matched;
}

uint64_t total_count(const NgramCounts& counts) {
    uint64_t total = 0;
    for (const auto& [gram, count] : counts) total += count;
    return total;
}

} // namespace

uint32_t word_edit_distance(std::string_view norm_ref, std::string_view norm_hyp) {
    auto [a, b] = intern_words(norm_ref, norm_hyp);
    return kernels::edit_distance(a, b);
}

double wer(std::string_view reference, std::string_view hypothesis, const NormProfile& profile) {
    const std::string nr = normalize(reference, profile);
    const std::string nh = normalize(hypothesis, profile);
    auto [a, b] = intern_words(nr, nh);
    if (a.empty()) throw EmptyReferenceError("wer: reference empty after normalization");
    return static_cast<double>(kernels::edit_distance(a, b)) / static_cast<double>(a.size());
}

double cer(std::string_view reference, std::string_view hypothesis, const NormProfile& profile) {
    const std::string nr = normalize(reference, profile);
    const std::string nh = normalize(hypothesis, profile);
    const auto a = split_chars(nr);
    const auto b = split_chars(nh);
    if (a.empty()) throw EmptyReferenceError("cer: reference empty after normalization");
    return static_cast<double>(char_distance(a, b)) / static_cast<double>(a.size());
}

double bleu(std::string_view reference, std::string_view hypothesis,
            const NormProfile& profile, int max_n, bool smoothing) {
    if (max_n < 1) throw ConfigError("bleu: max_n must be >= 1");
    const std::string nr = normalize(reference, profile);
    const std::string nh = normalize(hypothesis, profile);
    auto [ref, hyp] = intern_words(nr, nh);
    if (ref.empty()) throw EmptyReferenceError("bleu: reference empty after normalization");
    if (hyp.empty()) return 0.0;

    double log_sum = 0.0;
    for (int n = 1; n <= max_n; ++n) {
        const NgramCounts ref_counts = count_ngrams(ref, n);
        const NgramCounts hyp_counts = count_ngrams(hyp, n);
        uint64_t matched = clipped_matches(hyp_counts, ref_counts);
        uint64_t total = total_count(hyp_counts);
        if (smoothing && n >= 2) {
            matched += 1;
            total += 1;
        }
        if (matched == 0 || total == 0) return 0.0;
        log_sum += std::log(static_cast<double>(matched) / static_cast<double>(total));
    }
    const double geo_mean = std::exp(log_sum / max_n);

    const double r = static_cast<double>(ref.size());
    const double c = static_cast<double>(hyp.size());
    const double brevity = c >= r ? 1.0 : std::exp(1.0 - r / c);
    return std::min(1.0, geo_mean * brevity);
}

double rouge_n(std::string_view reference, std::string_view hypothesis,
               const NormProfile& profile, int n, bool f1) {
    if (n < 1) throw ConfigError("rouge_n: n must be >= 1");
    const std::string nr = normalize(reference, profile);
    const std::string nh = normalize(hypothesis, profile);
    auto [ref, hyp] = intern_words(nr, nh);

    const NgramCounts ref_counts = count_ngrams(ref, n);
    const NgramCounts hyp_counts = count_ngrams(hyp, n);
    const uint64_t ref_total = total_count(ref_counts);
    if (ref_total == 0) return 0.0;
    const uint64_t matched = clipped_matches(ref_counts, hyp_counts);
    const double recall = static_cast<double>(matched) / static_cast<double>(ref_total);
    if (!f1) return recall;

    const uint64_t hyp_total = total_count(hyp_counts);
    if (hyp_total == 0 || matched == 0) return 0.0;
    const double precision = static_cast<double>(matched) / static_cast<double>(hyp_total);
    return 2.0 * precision * recall / (precision + recall);
}

double weighted_rouge(std::string_view reference, std::string_view hypothesis,
                      const NormProfile& profile,
                      const std::vector<double>& weights, bool f1) {
    if (weights.empty()) throw ConfigError("weighted_rouge: weights must be non-empty");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ConfigError("weighted_rouge: weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ConfigError("weighted_rouge: weights must sum to 1");
    }
    double score = 0.0;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == 0.0) continue;
        score += weights[i] * rouge_n(reference, hypothesis, profile, static_cast<int>(i) + 1, f1);
    }
    return score;
}

std::pair<double, double> boundary_cer(std::string_view reference, std::string_view hypothesis,
                                       const NormProfile& profile, int k) {
    if (k < 1) throw ConfigError("boundary_cer: k must be >= 1");
    const auto ref = split_chars(normalize(reference, profile));
    const auto hyp = split_chars(normalize(hypothesis, profile));
    if (ref.empty()) throw EmptyReferenceError("boundary_cer: reference empty after normalization");

    const size_t kk = static_cast<size_t>(k);
    const size_t rn = std::min(kk, ref.size());
    const size_t hn = std::min(kk, hyp.size());

    auto window_cer = [&](size_t roff, size_t hoff) {
        const std::span<const uint32_t> rw(ref.data() + roff, rn);
        const std::span<const uint32_t> hw(hyp.data() + hoff, hn);
        return static_cast<double>(kernels::edit_distance(rw, hw)) / static_cast<double>(rn);
    };
    const double head = window_cer(0, 0);
    const double tail = window_cer(ref.size() - rn, hyp.size() - hn);
    return {head, tail};
}

std::pair<double, double> boundary_word_match(std::string_view reference, std::string_view hypothesis,
                                              const NormProfile& profile) {
    const std::string nr = normalize(reference, profile);
    const std::string nh = normalize(hypothesis, profile);
    const auto ref_words = split_words(nr);
    const auto hyp_words = split_words(nh);
    if (ref_words.empty()) throw EmptyReferenceError("boundary_word_match: reference has no words");
    if (hyp_words.empty()) throw DataError("boundary_word_match: hypothesis has no words");

    auto norm_dist = [](std::string_view a, std::string_view b) {
        const auto ca = decode_utf8(a);
        const auto cb = decode_utf8(b);
        const size_t longest = std::max(ca.size(), cb.size());
        return static_cast<double>(kernels::edit_distance(ca, cb)) / static_cast<double>(longest);
    };
    return {norm_dist(ref_words.front(), hyp_words.front()),
            norm_dist(ref_words.back(), hyp_words.back())};
}

ChunkScores score_pair(std::string_view reference, std::string_view hypothesis,
                       std::string source, const MetricConfig& cfg) {
    ChunkScores s;
    s.hypothesis_source = std::move(source);
    s.wer = wer(reference, hypothesis, cfg.norm);
    s.cer = cer(reference, hypothesis, cfg.norm);
    s.bleu = bleu(reference, hypothesis, cfg.norm, cfg.bleu_max_n, cfg.bleu_smoothing);
    s.rouge_weighted = weighted_rouge(reference, hypothesis, cfg.norm, cfg.rouge_weights, cfg.rouge_f1);
    std::tie(s.head_cer, s.tail_cer) = boundary_cer(reference, hypothesis, cfg.norm, cfg.boundary_k);
    if (split_words(normalize(hypothesis, cfg.norm)).empty()) {
        // An empty hypothesis cannot match any boundary word.
        s.head_word_match = 1.0;
        s.tail_word_match = 1.0;
    } else {
        std::tie(s.head_word_match, s.tail_word_match) =
            boundary_word_match(reference, hypothesis, cfg.norm);
    }
    return s;
}

} // namespace sikta
