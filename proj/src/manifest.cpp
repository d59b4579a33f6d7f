#include "sikta/manifest.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "sikta/errors.hpp"

namespace sikta {

const char* obs_kind_name(ObsKind kind) {
    return kind == ObsKind::kSubtitleBlock ? "subtitle_block" : "aligned_sentence";
}

ObsKind obs_kind_from_name(const std::string& name) {
    if (name == "subtitle_block") return ObsKind::kSubtitleBlock;
    if (name == "aligned_sentence") return ObsKind::kAlignedSentence;
    throw DataError("unknown observation kind: " + name);
}

namespace {

const std::set<std::string> kDocumentKeys = {
    "schema_id", "doc_id", "media_ref", "dataset", "duration", "observations"};
const std::set<std::string> kObservationKeys = {"obs_id", "start", "end", "text", "kind"};

void reject_unknown_keys(const Json& rec, const std::set<std::string>& allowed, const char* what) {
    for (const auto& [key, value] : rec.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            throw DataError(std::string(what) + ": unknown field '" + key + "'");
        }
    }
}

double number_field(const Json& rec, const char* key, const char* what) {
    require_field(rec, key, what);
    if (!rec.at(key).is_number()) {
        throw DataError(std::string(what) + ": field '" + key + "' must be a number");
    }
    return rec.at(key).get<double>();
}

std::string string_field(const Json& rec, const char* key, const char* what) {
    require_field(rec, key, what);
    if (!rec.at(key).is_string()) {
        throw DataError(std::string(what) + ": field '" + key + "' must be a string");
    }
    return rec.at(key).get<std::string>();
}

} // namespace

Json document_to_json(const AudioDocument& doc) {
    Json rec;
    rec["schema_id"] = kManifestSchemaId;
    rec["doc_id"] = doc.doc_id;
    rec["media_ref"] = doc.media_ref;
    rec["dataset"] = doc.dataset;
    rec["duration"] = doc.duration;
    Json obs_list = Json::array();
    for (const Observation& obs : doc.observations) {
        Json o;
        o["obs_id"] = obs.obs_id;
        o["start"] = obs.start;
        o["end"] = obs.end;
        o["text"] = obs.text;
        o["kind"] = obs_kind_name(obs.kind);
        obs_list.push_back(std::move(o));
    }
    rec["observations"] = std::move(obs_list);
    return rec;
}

AudioDocument document_from_json(const Json& rec) {
    if (!rec.is_object()) throw DataError("manifest record: not an object");
    reject_unknown_keys(rec, kDocumentKeys, "manifest record");
    const std::string schema = string_field(rec, "schema_id", "manifest record");
    if (schema != kManifestSchemaId) {
        throw DataError("manifest record: unsupported schema_id '" + schema + "'");
    }

    AudioDocument doc;
    doc.doc_id = string_field(rec, "doc_id", "manifest record");
    if (doc.doc_id.empty()) throw DataError("manifest record: empty doc_id");
    doc.media_ref = string_field(rec, "media_ref", "manifest record");
    doc.dataset = string_field(rec, "dataset", "manifest record");
    doc.duration = number_field(rec, "duration", "manifest record");
    if (doc.duration < 0.0) throw DataError("manifest record: negative duration");

    require_field(rec, "observations", "manifest record");
    if (!rec.at("observations").is_array()) {
        throw DataError("manifest record: 'observations' must be an array");
    }
    for (const Json& o : rec.at("observations")) {
        if (!o.is_object()) throw DataError("observation: not an object");
        reject_unknown_keys(o, kObservationKeys, "observation");
        Observation obs;
        obs.obs_id = string_field(o, "obs_id", "observation");
        obs.start = number_field(o, "start", "observation");
        obs.end = number_field(o, "end", "observation");
        obs.text = string_field(o, "text", "observation");
        obs.kind = obs_kind_from_name(string_field(o, "kind", "observation"));
        if (obs.start < 0.0) {
            throw DataError("observation " + obs.obs_id + ": negative start");
        }
        if (obs.end < obs.start) {
            throw DataError("observation " + obs.obs_id + ": end < start");
        }
        doc.observations.push_back(std::move(obs));
    }
    std::stable_sort(doc.observations.begin(), doc.observations.end(),
                     [](const Observation& a, const Observation& b) {
                         return a.start < b.start || (a.start == b.start && a.end < b.end);
                     });
    return doc;
}

ParseResult parse_manifest(std::istream& in, const ParseOptions& options) {
    ParseResult result;
    std::unordered_set<std::string> seen_ids;
    const bool check_dataset = !options.dataset_allowlist.empty();

    result.errors = read_jsonl(in, [&](Json&& rec, size_t) -> std::optional<std::string> {
        AudioDocument doc;
        try {
            doc = document_from_json(rec);
        } catch (const DataError& e) {
            return e.what();
        }
        if (check_dataset &&
            std::find(options.dataset_allowlist.begin(), options.dataset_allowlist.end(),
                      doc.dataset) == options.dataset_allowlist.end()) {
            return "dataset '" + doc.dataset + "' not in allow-list";
        }
        if (!seen_ids.insert(doc.doc_id).second) {
            throw DataError("duplicate doc_id: " + doc.doc_id);
        }
        result.documents.push_back(std::move(doc));
        return std::nullopt;
    });
    return result;
}

void serialize_manifest(const std::vector<AudioDocument>& docs, std::ostream& out) {
    for (const AudioDocument& doc : docs) {
        out << document_to_json(doc).dump() << '\n';
    }
}

ValidationReport validate_document(const AudioDocument& doc) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::string obs_id, std::string message) {
        report.violations.push_back({kind, std::move(obs_id), std::move(message)});
    };

    if (doc.doc_id.empty()) {
        add(ViolationKind::kEmptyDocId, "", "document has empty doc_id");
    }
    if (doc.duration < 0.0) {
        add(ViolationKind::kNegativeDuration, "", "document duration is negative");
    }

    const Observation* prev = nullptr;
    double max_end_so_far = 0.0;
    for (const Observation& obs : doc.observations) {
        if (obs.start < 0.0 || obs.end > doc.duration) {
            add(ViolationKind::kObservationOutOfRange, obs.obs_id,
                "interval [" + std::to_string(obs.start) + ", " + std::to_string(obs.end) +
                    "] outside [0, duration]");
        }
        if (obs.end <= obs.start) {
            add(ViolationKind::kObservationZeroOrNegativeLength, obs.obs_id,
                "zero or negative length interval");
        }
        if (prev != nullptr) {
            if (obs.start < prev->start) {
                add(ViolationKind::kObservationsUnsorted, obs.obs_id,
                    "observation starts before its predecessor");
            }
            if (obs.start < max_end_so_far) {
                add(ViolationKind::kOverlappingObservations, obs.obs_id,
                    "overlaps an earlier observation");
            }
        }
        max_end_so_far = std::max(max_end_so_far, obs.end);
        prev = &obs;
    }
    return report;
}

} // namespace sikta
