#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "sikta/jsonl.hpp"

namespace sikta {

inline constexpr const char* kManifestSchemaId = "sikta/manifest@1";

inline constexpr double kSliceSampleRate = 16000;
inline constexpr int kSliceChannels = 1;

enum class ObsKind { kSubtitleBlock, kAlignedSentence };

const char* obs_kind_name(ObsKind kind);
ObsKind obs_kind_from_name(const std::string& name); // throws DataError

// One atomic transcript unit: a subtitle block or a force-aligned sentence.
struct Observation {
    std::string obs_id;
    double start = 0.0; // seconds
    double end = 0.0;   // seconds
    std::string text;
    ObsKind kind = ObsKind::kSubtitleBlock;

    bool operator==(const Observation&) const = default;
};

// One source recording with its ordered transcript observations.
struct AudioDocument {
    std::string doc_id;
    std::string media_ref;
    std::string dataset;
    double duration = 0.0; // seconds
    std::vector<Observation> observations;

    bool operator==(const AudioDocument&) const = default;
};

// Instruction for the external decoder: which window of which recording
// to cut, always 16 kHz mono.
struct SliceSpec {
    std::string media_ref;
    double start = 0.0;
    double end = 0.0;
    double sample_rate = kSliceSampleRate;
    int channels = kSliceChannels;
};

struct ParseOptions {
    // Datasets accepted by the pipeline; empty means accept any tag.
    std::vector<std::string> dataset_allowlist;
};

struct ParseResult {
    std::vector<AudioDocument> documents;
    std::vector<LineError> errors;
};

// Parses line-delimited manifest records. Invalid lines are reported with
// their line numbers and skipped; a duplicate doc_id aborts with DataError.
// Observations are sorted by (start, end) on load.
ParseResult parse_manifest(std::istream& in, const ParseOptions& options = {});

void serialize_manifest(const std::vector<AudioDocument>& docs, std::ostream& out);

Json document_to_json(const AudioDocument& doc);
AudioDocument document_from_json(const Json& rec); // throws DataError

enum class ViolationKind {
    kEmptyDocId,
    kNegativeDuration,
    kObservationOutOfRange,
    kObservationZeroOrNegativeLength,
    kObservationsUnsorted,
    kOverlappingObservations,
};

struct Violation {
    ViolationKind kind;
    std::string obs_id; // empty for document-level findings
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every document invariant without mutating the input. Violations
// are data for the gate, not errors.
ValidationReport validate_document(const AudioDocument& doc);

} // namespace sikta
