#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sikta/normalize.hpp"

namespace sikta {

// Hypothesis provenance tags used throughout the pipeline.
inline constexpr const char* kPrimaryAsr = "primary_asr";
inline constexpr const char* kSecondaryAsr = "secondary_asr";

struct MetricConfig {
    NormProfile norm;
    int bleu_max_n = 4;
    bool bleu_smoothing = true; // add-one on n-gram counts for n >= 2
    std::vector<double> rouge_weights = {0.0, 0.25, 0.5, 0.25};
    bool rouge_f1 = false;      // recall by default
    int boundary_k = 10;
    double boundary_word_max_norm_dist = 0.34;
};

// Every comparison metric for one (reference, hypothesis) pairing.
struct ChunkScores {
    double wer = 0.0;
    double cer = 0.0;
    double bleu = 0.0;
    double rouge_weighted = 0.0;
    double head_cer = 0.0;
    double tail_cer = 0.0;
    double head_word_match = 0.0; // normalized edit distance, 0 = exact
    double tail_word_match = 0.0;
    std::string hypothesis_source;
};

// Word-level edit distance between already-normalized texts.
uint32_t word_edit_distance(std::string_view norm_ref, std::string_view norm_hyp);

double wer(std::string_view reference, std::string_view hypothesis, const NormProfile& profile);
double cer(std::string_view reference, std::string_view hypothesis, const NormProfile& profile);

double bleu(std::string_view reference, std::string_view hypothesis,
            const NormProfile& profile, int max_n = 4, bool smoothing = true);

double rouge_n(std::string_view reference, std::string_view hypothesis,
               const NormProfile& profile, int n, bool f1 = false);

// Weighted combination of ROUGE-1..ROUGE-len(weights). Weights must be
// non-negative and sum to 1 within 1e-9.
double weighted_rouge(std::string_view reference, std::string_view hypothesis,
                      const NormProfile& profile,
                      const std::vector<double>& weights = {0.0, 0.25, 0.5, 0.25},
                      bool f1 = false);

// CER over the first/last k normalized characters of each text. Texts
// shorter than k contribute their full length.
std::pair<double, double> boundary_cer(std::string_view reference, std::string_view hypothesis,
                                       const NormProfile& profile, int k = 10);

// Normalized edit distance between the first words and between the last
// words; 0 means exact match, the caller compares against a threshold.
std::pair<double, double> boundary_word_match(std::string_view reference, std::string_view hypothesis,
                                              const NormProfile& profile);

// All metrics for one hypothesis, assembled under one config.
ChunkScores score_pair(std::string_view reference, std::string_view hypothesis,
                       std::string source, const MetricConfig& cfg);

} // namespace sikta
