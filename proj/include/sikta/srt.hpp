#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "sikta/manifest.hpp"

namespace sikta {

struct BlockError {
    size_t line = 0; // first line of the offending block
    std::string message;
};

struct IngestResult {
    AudioDocument document;
    std::vector<BlockError> errors;
};

struct SubtitleOptions {
    // doc_id defaults to media_ref when not set.
    std::optional<std::string> doc_id;
    // Without an explicit duration the last observation end is used.
    std::optional<double> duration;
};

// Ingests an SRT-compatible block stream: optional index line, a
// "HH:MM:SS.mmm --> HH:MM:SS.mmm" range (comma decimals accepted), then
// text lines until a blank line. Multi-line text is joined with a single
// space; observations come out sorted by start time. Blocks with
// unparseable timecodes are reported and skipped. An empty file is a
// valid, observation-less document.
IngestResult ingest_subtitles(std::istream& in, const std::string& media_ref,
                              const std::string& dataset,
                              const SubtitleOptions& options = {});

// Parses "HH:MM:SS.mmm" (or comma separator) to seconds.
std::optional<double> parse_timecode(const std::string& token);

} // namespace sikta
