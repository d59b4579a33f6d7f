#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sikta/errors.hpp"

namespace sikta {

using Json = nlohmann::ordered_json;

// A recoverable problem tied to one input line (1-based).
struct LineError {
    size_t line = 0;
    std::string message;
};

// Reads line-delimited JSON. `handle` is called with the parsed record and
// line number; it returns an error string for records it rejects. Blank
// lines are skipped. Parse failures become LineErrors, not exceptions.
inline std::vector<LineError> read_jsonl(
    std::istream& in,
    const std::function<std::optional<std::string>(Json&&, size_t)>& handle) {
    std::vector<LineError> errors;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        Json rec = Json::parse(line, nullptr, false);
        if (rec.is_discarded()) {
            errors.push_back({line_no, "invalid JSON"});
            continue;
        }
        if (auto err = handle(std::move(rec), line_no)) {
            errors.push_back({line_no, *err});
        }
    }
    return errors;
}

// Writes `body` to a sibling temp file, then renames into place so readers
// never observe a half-written stage output.
inline void write_atomic(const std::filesystem::path& path,
                         const std::function<void(std::ostream&)>& body) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot open for writing: " + tmp.string());
        body(out);
        out.flush();
        if (!out) throw DataError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline void require_field(const Json& rec, const char* key, const char* what) {
    if (!rec.contains(key)) {
        throw DataError(std::string(what) + ": missing field '" + key + "'");
    }
}

} // namespace sikta
