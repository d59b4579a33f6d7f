#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sikta/clients.hpp"
#include "sikta/jsonl.hpp"
#include "sikta/metrics.hpp"
#include "sikta/packer.hpp"

namespace sikta {

inline constexpr const char* kDecisionSchemaId = "sikta/decision@1";
inline constexpr const char* kDefaultThresholdKey = "default";
inline constexpr const char* kNoSpeechLanguage = "nospeech";

struct Stage1Thresholds {
    double cer_max = 0.6;
    double bleu_min = 0.2;
};

struct Stage2Thresholds {
    double bleu_min = 0.7;
    double rouge_weighted_min = 0.7;
    double boundary_cer_max = 0.2;
};

struct DatasetThresholds {
    Stage1Thresholds stage1;
    Stage2Thresholds stage2;
};

enum class Stage { kStage2, kStage1, kRejected };
const char* stage_name(Stage stage);

struct Thresholds {
    // Keyed by dataset tag; unknown tags fall back to "default".
    std::map<std::string, DatasetThresholds> per_dataset = {{kDefaultThresholdKey, {}}};
    double timestamp_boundary_cer_max = 0.2;
    bool require_both_hypotheses = true;
    // Whether the Stage 2 boundary-CER rule also applies to the secondary
    // hypothesis (default: primary only).
    bool stage2_boundary_both = false;
    Stage nonspeech_stage = Stage::kStage1;

    const DatasetThresholds& lookup(const std::string& dataset) const;
    void validate() const; // throws ConfigError
};

// One threshold comparison, kept for the audit trail.
struct CheckRecord {
    std::string metric;
    double value = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string source; // hypothesis source, or "" for chunk-level checks
};

struct StageDecision {
    std::string chunk_id;
    Stage stage = Stage::kRejected;
    bool timestamp_eligible = false;
    std::vector<CheckRecord> reasons;
};

enum class GateStatus { kDecided, kDeferred };

struct GateOutcome {
    GateStatus status = GateStatus::kDecided;
    StageDecision decision;
    std::string defer_reason;
};

enum class LanguageGateResult { kRetained, kRejected, kDeferred };

// Retains speech chunks whose detected language equals the target;
// non-speech chunks pass only on a "nospeech" detection. Missing records
// defer the chunk rather than silently retaining it.
LanguageGateResult language_gate(const Chunk& chunk,
                                 const std::optional<LanguageDetection>& detection,
                                 const std::string& target_language);

// Scores the chunk reference against every provided hypothesis.
// Refuses to score speech chunks whose reference normalizes to empty.
std::vector<ChunkScores> score_chunk(const Chunk& chunk,
                                     const std::map<std::string, std::string>& hypotheses,
                                     const MetricConfig& metric_cfg);

// Stage 1: relaxed CER/BLEU bounds on every required hypothesis, plus
// timestamp eligibility from the primary hypothesis boundary CER.
GateOutcome stage1_filter(const std::vector<ChunkScores>& scores, const Thresholds& thresholds,
                          const std::string& dataset);

// Stage 2: stricter BLEU plus weighted ROUGE and the 0.2 boundary-CER
// rule; requires a decision that already passed stage 1.
GateOutcome stage2_filter(const std::vector<ChunkScores>& scores, const Thresholds& thresholds,
                          const std::string& dataset, const StageDecision& stage1_decision);

// Full per-chunk gate: language gating, scoring, stage filters, and the
// non-speech path.
GateOutcome gate_chunk(const Chunk& chunk,
                       const std::optional<LanguageDetection>& detection,
                       const std::map<std::string, std::string>& hypotheses,
                       const Thresholds& thresholds, const MetricConfig& metric_cfg,
                       const std::string& target_language);

Json gate_outcome_to_json(const std::string& chunk_id, const GateOutcome& outcome);
GateOutcome gate_outcome_from_json(const Json& rec, std::string* chunk_id); // throws DataError

} // namespace sikta
