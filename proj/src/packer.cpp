#include "sikta/packer.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>

#include "sikta/errors.hpp"
#include "sikta/hash.hpp"

namespace sikta {

namespace {

int64_t to_millis(double seconds) {
    return std::llround(seconds * 1000.0);
}

std::string join_texts(const std::vector<Observation>& observations) {
    std::string text;
    for (const Observation& obs : observations) {
        if (obs.text.empty()) continue;
        if (!text.empty()) text += ' ';
        text += obs.text;
    }
    return text;
}

Chunk finish_chunk(const AudioDocument& doc, std::vector<Observation> members,
                   double start, double end, bool oversize, uint64_t fingerprint) {
    Chunk chunk;
    chunk.doc_id = doc.doc_id;
    chunk.media_ref = doc.media_ref;
    chunk.dataset = doc.dataset;
    chunk.start = start;
    chunk.end = end;
    chunk.oversize = oversize;
    chunk.reference_text = join_texts(members);
    for (Observation& obs : members) {
        obs.start -= start;
        obs.end -= start;
    }
    chunk.observations = std::move(members);
    chunk.chunk_id = make_chunk_id(doc.doc_id, start, end, false, fingerprint);
    return chunk;
}

} // namespace

void PackPolicy::validate() const {
    if (max_chunk_len <= 0.0 || max_chunk_len > kMaxChunkLenCeiling) {
        throw ConfigError("pack policy: max_chunk_len must be in (0, 30]");
    }
    if (short_len_choices.empty()) {
        throw ConfigError("pack policy: short_len_choices must be non-empty");
    }
    double weight_sum = 0.0;
    for (const auto& [len, weight] : short_len_choices) {
        if (len <= 0.0 || len > kMaxChunkLenCeiling) {
            throw ConfigError("pack policy: chunk length choices must be in (0, 30]");
        }
        if (weight < 0.0) throw ConfigError("pack policy: sampling weights must be >= 0");
        weight_sum += weight;
    }
    if (weight_sum <= 0.0) {
        throw ConfigError("pack policy: at least one sampling weight must be positive");
    }
    if (nonspeech_target_fraction < 0.0 || nonspeech_target_fraction >= 1.0) {
        throw ConfigError("pack policy: nonspeech_target_fraction must be in [0, 1)");
    }
    if (min_gap_for_nonspeech <= 0.0) {
        throw ConfigError("pack policy: min_gap_for_nonspeech must be > 0");
    }
}

uint64_t PackPolicy::fingerprint() const {
    char buf[64];
    uint64_t h = kFnvOffset;
    auto mix_num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.9g;", v);
        h = fnv1a64(buf, h);
    };
    mix_num(max_chunk_len);
    for (const auto& [len, weight] : short_len_choices) {
        mix_num(len);
        mix_num(weight);
    }
    mix_num(nonspeech_target_fraction);
    mix_num(min_gap_for_nonspeech);
    h = fnv1a64_u64(rng_seed, h);
    return h;
}

std::string make_chunk_id(const std::string& doc_id, double start, double end,
                          bool is_nonspeech, uint64_t policy_fingerprint) {
    uint64_t h = fnv1a64(doc_id);
    h = fnv1a64_u64(static_cast<uint64_t>(to_millis(start)), h);
    h = fnv1a64_u64(static_cast<uint64_t>(to_millis(end)), h);
    h = fnv1a64_u64(is_nonspeech ? 1 : 0, h);
    h = fnv1a64_u64(policy_fingerprint, h);
    return hex16(h);
}

std::vector<Chunk> pack_chunks(const AudioDocument& doc, double max_len,
                               uint64_t policy_fingerprint) {
    if (max_len <= 0.0 || max_len > kMaxChunkLenCeiling) {
        throw ConfigError("pack_chunks: max_len must be in (0, 30]");
    }
    std::vector<Chunk> chunks;
    std::vector<Observation> open;
    double open_start = 0.0;
    double open_end = 0.0;

    auto flush = [&] {
        if (open.empty()) return;
        chunks.push_back(finish_chunk(doc, std::move(open), open_start, open_end,
                                      /*oversize=*/false, policy_fingerprint));
        open.clear();
    };

    for (const Observation& obs : doc.observations) {
        if (obs.end - obs.start > max_len) {
            flush();
            chunks.push_back(finish_chunk(doc, {obs}, obs.start, obs.end,
                                          /*oversize=*/true, policy_fingerprint));
            continue;
        }
        if (open.empty()) {
            open_start = obs.start;
            open_end = obs.end;
            open.push_back(obs);
            continue;
        }
        if (obs.end - open_start <= max_len) {
            open.push_back(obs);
            open_end = std::max(open_end, obs.end);
        } else {
            flush();
            open_start = obs.start;
            open_end = obs.end;
            open.push_back(obs);
        }
    }
    flush();
    return chunks;
}

std::vector<Chunk> sample_short_chunks(const AudioDocument& doc, const PackPolicy& policy) {
    policy.validate();
    double weight_sum = 0.0;
    for (const auto& [len, weight] : policy.short_len_choices) weight_sum += weight;

    const uint64_t key = mix64(fnv1a64(doc.doc_id), mix64(policy.rng_seed, fnv1a64("short_len")));
    const double u = unit_draw(key) * weight_sum;

    double cumulative = 0.0;
    double max_len = policy.short_len_choices.back().first;
    for (const auto& [len, weight] : policy.short_len_choices) {
        cumulative += weight;
        if (u < cumulative) {
            max_len = len;
            break;
        }
    }
    return pack_chunks(doc, max_len, policy.fingerprint());
}

std::vector<Chunk> extract_nonspeech(const AudioDocument& doc, const PackPolicy& policy) {
    std::vector<Chunk> candidates;
    if (policy.nonspeech_target_fraction <= 0.0) return candidates;

    const uint64_t fingerprint = policy.fingerprint();
    double cursor = -1.0; // end of speech seen so far; gaps before the first observation are not used
    for (const Observation& obs : doc.observations) {
        if (cursor >= 0.0 && obs.start - cursor >= policy.min_gap_for_nonspeech) {
            Chunk chunk;
            chunk.doc_id = doc.doc_id;
            chunk.media_ref = doc.media_ref;
            chunk.dataset = doc.dataset;
            chunk.start = cursor;
            chunk.end = std::min(obs.start, cursor + policy.max_chunk_len);
            chunk.is_nonspeech = true;
            chunk.chunk_id = make_chunk_id(doc.doc_id, chunk.start, chunk.end, true, fingerprint);
            candidates.push_back(std::move(chunk));
        }
        cursor = std::max(cursor, obs.end);
    }
    return candidates;
}

std::vector<Chunk> plan_nonspeech(const std::vector<Chunk>& candidates,
                                  double total_speech_seconds, const PackPolicy& policy) {
    std::vector<Chunk> accepted;
    const double budget = policy.nonspeech_target_fraction * total_speech_seconds;
    double used = 0.0;
    for (const Chunk& chunk : candidates) {
        if (!chunk.is_nonspeech) throw DataError("plan_nonspeech: candidate is not non-speech");
        if (used + chunk.span() > budget) continue;
        used += chunk.span();
        accepted.push_back(chunk);
    }
    return accepted;
}

SliceSpec emit_slice_spec(const Chunk& chunk) {
    SliceSpec spec;
    spec.media_ref = chunk.media_ref;
    spec.start = chunk.start;
    spec.end = chunk.end;
    return spec;
}

Json chunk_to_json(const Chunk& chunk) {
    Json rec;
    rec["schema_id"] = kChunkSchemaId;
    rec["chunk_id"] = chunk.chunk_id;
    rec["doc_id"] = chunk.doc_id;
    rec["media_ref"] = chunk.media_ref;
    rec["dataset"] = chunk.dataset;
    rec["start"] = chunk.start;
    rec["end"] = chunk.end;
    Json obs_list = Json::array();
    for (const Observation& obs : chunk.observations) {
        Json o;
        o["obs_id"] = obs.obs_id;
        o["start"] = obs.start;
        o["end"] = obs.end;
        o["text"] = obs.text;
        o["kind"] = obs_kind_name(obs.kind);
        obs_list.push_back(std::move(o));
    }
    rec["observations"] = std::move(obs_list);
    rec["reference_text"] = chunk.reference_text;
    rec["is_nonspeech"] = chunk.is_nonspeech;
    rec["oversize"] = chunk.oversize;
    return rec;
}

Chunk chunk_from_json(const Json& rec) {
    if (!rec.is_object()) throw DataError("chunk record: not an object");
    auto str = [&](const char* key) {
        require_field(rec, key, "chunk record");
        return rec.at(key).get<std::string>();
    };
    auto num = [&](const char* key) {
        require_field(rec, key, "chunk record");
        return rec.at(key).get<double>();
    };
    if (str("schema_id") != kChunkSchemaId) {
        throw DataError("chunk record: unsupported schema_id");
    }
    Chunk chunk;
    chunk.chunk_id = str("chunk_id");
    chunk.doc_id = str("doc_id");
    chunk.media_ref = str("media_ref");
    chunk.dataset = str("dataset");
    chunk.start = num("start");
    chunk.end = num("end");
    require_field(rec, "observations", "chunk record");
    for (const Json& o : rec.at("observations")) {
        Observation obs;
        obs.obs_id = o.at("obs_id").get<std::string>();
        obs.start = o.at("start").get<double>();
        obs.end = o.at("end").get<double>();
        obs.text = o.at("text").get<std::string>();
        obs.kind = obs_kind_from_name(o.at("kind").get<std::string>());
        chunk.observations.push_back(std::move(obs));
    }
    chunk.reference_text = str("reference_text");
    require_field(rec, "is_nonspeech", "chunk record");
    chunk.is_nonspeech = rec.at("is_nonspeech").get<bool>();
    require_field(rec, "oversize", "chunk record");
    chunk.oversize = rec.at("oversize").get<bool>();
    return chunk;
}

Json slice_spec_to_json(const std::string& chunk_id, const SliceSpec& spec) {
    Json rec;
    rec["chunk_id"] = chunk_id;
    rec["media_ref"] = spec.media_ref;
    rec["start"] = spec.start;
    rec["end"] = spec.end;
    rec["sample_rate"] = spec.sample_rate;
    rec["channels"] = spec.channels;
    return rec;
}

} // namespace sikta
