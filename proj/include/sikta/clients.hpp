#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sikta/jsonl.hpp"
#include "sikta/manifest.hpp"

namespace sikta {

// One ASR transcription of a chunk.
struct Hypothesis {
    std::string chunk_id;
    std::string source; // "primary_asr" | "secondary_asr"
    std::string text;
    std::string model_id;
};

struct LanguageDetection {
    std::string chunk_id;
    std::string language; // ISO 639-1 code or "nospeech"
    double confidence = 0.0;
};

// In-memory hypothesis index by (chunk_id, source). Read-only after load;
// safe to share across workers.
class HypothesisStore {
public:
    // Last record wins for duplicate keys; the caller sees a warning.
    void put(Hypothesis hyp);
    std::optional<Hypothesis> find(const std::string& chunk_id, const std::string& source) const;
    // source -> text for every hypothesis of this chunk.
    std::map<std::string, std::string> texts_for(const std::string& chunk_id) const;
    size_t size() const { return records_.size(); }
    const std::map<std::pair<std::string, std::string>, Hypothesis>& records() const {
        return records_;
    }

private:
    std::map<std::pair<std::string, std::string>, Hypothesis> records_;
};

class DetectionStore {
public:
    void put(LanguageDetection det);
    std::optional<LanguageDetection> find(const std::string& chunk_id) const;
    size_t size() const { return records_.size(); }
    const std::map<std::string, LanguageDetection>& records() const { return records_; }

private:
    std::map<std::string, LanguageDetection> records_;
};

struct LoadStats {
    std::vector<LineError> errors;
    std::vector<std::string> warnings; // duplicate keys
};

LoadStats load_hypotheses(std::istream& in, HypothesisStore& store);
LoadStats load_detections(std::istream& in, DetectionStore& store);

Json hypothesis_to_json(const Hypothesis& hyp);
Json detection_to_json(const LanguageDetection& det);

// ---- service mode ------------------------------------------------------

struct SliceRequest {
    std::string chunk_id;
    std::string media_ref;
    double start = 0.0;
    double end = 0.0;
};

// Outcome for one request item: either a payload or a failure message.
template <typename T>
struct ItemResult {
    std::string chunk_id;
    std::optional<T> value;
    std::string error; // set when value is empty
    bool ok() const { return value.has_value(); }
};

struct ServiceConfig {
    std::string transcribe_url;     // e.g. http://host:port
    std::string detect_url;
    std::string auth_header = "Authorization";
    std::string auth_token;         // empty = no auth header sent
    int batch_size = 64;
    int max_in_flight = 4;          // concurrent batches
    int max_attempts = 3;
    int backoff_initial_ms = 100;
    std::string source = "primary_asr"; // tag applied to transcription results
};

// HTTP client for the POST /transcribe and POST /detect_language
// contract. Transient failures (transport errors, 5xx, or a non-2xx body
// with retryable=true) are retried with exponential backoff; per-item
// errors surface in the result list instead of aborting the batch.
class AnnotationService {
public:
    explicit AnnotationService(ServiceConfig config);

    std::vector<ItemResult<Hypothesis>> transcribe(const std::vector<SliceRequest>& items) const;
    std::vector<ItemResult<LanguageDetection>> detect_language(
        const std::vector<SliceRequest>& items) const;

private:
    ServiceConfig config_;
};

} // namespace sikta
