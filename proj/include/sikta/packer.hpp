#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sikta/jsonl.hpp"
#include "sikta/manifest.hpp"

namespace sikta {

inline constexpr const char* kChunkSchemaId = "sikta/chunk@1";
inline constexpr double kMaxChunkLenCeiling = 30.0;

// A packed, contiguous window of observations: the unit of training.
struct Chunk {
    std::string chunk_id;
    std::string doc_id;
    std::string media_ref;
    std::string dataset;
    double start = 0.0; // absolute seconds in the source recording
    double end = 0.0;
    // Source observations with timestamps re-based to chunk start.
    std::vector<Observation> observations;
    std::string reference_text; // observation texts joined with single spaces
    bool is_nonspeech = false;
    bool oversize = false; // single observation longer than max_len

    double span() const { return end - start; }
};

struct PackPolicy {
    double max_chunk_len = kMaxChunkLenCeiling;
    // (maximum length, sampling weight) drawn once per document.
    std::vector<std::pair<double, double>> short_len_choices = {{kMaxChunkLenCeiling, 1.0}};
    double nonspeech_target_fraction = 0.0018; // of total speech duration
    double min_gap_for_nonspeech = 5.0;        // seconds
    uint64_t rng_seed = 0;

    void validate() const; // throws ConfigError
    // Stable digest of every field; part of each chunk id so chunk files
    // from different policies never collide.
    uint64_t fingerprint() const;
};

// Deterministic chunk identifier: joinable across stage files without a
// registry.
std::string make_chunk_id(const std::string& doc_id, double start, double end,
                          bool is_nonspeech, uint64_t policy_fingerprint);

// Greedy left-to-right packing: the open chunk absorbs the next
// observation iff it still fits within max_len of the chunk start.
// Observations longer than max_len come out as singleton oversize chunks
// for the gate to reject. Every observation lands in exactly one chunk.
std::vector<Chunk> pack_chunks(const AudioDocument& doc, double max_len,
                               uint64_t policy_fingerprint = 0);

// Draws a maximum length for this document from short_len_choices (seeded
// by doc_id), then packs with it. Deterministic per (doc_id, rng_seed).
std::vector<Chunk> sample_short_chunks(const AudioDocument& doc, const PackPolicy& policy);

// Non-speech candidates: one chunk per inter-observation gap of at least
// min_gap_for_nonspeech seconds, truncated to max_chunk_len. The corpus
// cap is applied later by plan_nonspeech.
std::vector<Chunk> extract_nonspeech(const AudioDocument& doc, const PackPolicy& policy);

// Single-threaded planning pass: accepts candidates in order while the
// accumulated non-speech duration stays within
// nonspeech_target_fraction * total_speech_seconds.
std::vector<Chunk> plan_nonspeech(const std::vector<Chunk>& candidates,
                                  double total_speech_seconds, const PackPolicy& policy);

SliceSpec emit_slice_spec(const Chunk& chunk);

Json chunk_to_json(const Chunk& chunk);
Chunk chunk_from_json(const Json& rec); // throws DataError
Json slice_spec_to_json(const std::string& chunk_id, const SliceSpec& spec);

} // namespace sikta
