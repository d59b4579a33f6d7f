#include "sikta/srt.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace sikta {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

std::optional<double> parse_timecode(const std::string& token) {
    unsigned hh = 0, mm = 0, ss = 0, ms = 0;
    char sep = 0;
    int consumed = 0;
    if (std::sscanf(token.c_str(), "%u:%u:%u%c%3u%n", &hh, &mm, &ss, &sep, &ms, &consumed) != 5 ||
        static_cast<size_t>(consumed) != token.size()) {
        return std::nullopt;
    }
    if ((sep != '.' && sep != ',') || mm > 59 || ss > 59 || ms > 999) {
        return std::nullopt;
    }
    const uint64_t total_ms =
        ((static_cast<uint64_t>(hh) * 60 + mm) * 60 + ss) * 1000 + ms;
    return static_cast<double>(total_ms) / 1000.0;
}

IngestResult ingest_subtitles(std::istream& in, const std::string& media_ref,
                              const std::string& dataset,
                              const SubtitleOptions& options) {
    IngestResult result;
    AudioDocument& doc = result.document;
    doc.doc_id = options.doc_id.value_or(media_ref);
    doc.media_ref = media_ref;
    doc.dataset = dataset;

    std::vector<std::string> lines;
    {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
        if (!lines.empty() && lines[0].rfind("\xEF\xBB\xBF", 0) == 0) {
            lines[0].erase(0, 3);
        }
    }

    size_t i = 0;
    size_t block_counter = 0;
    while (i < lines.size()) {
        if (is_blank(lines[i])) {
            ++i;
            continue;
        }
        const size_t block_start_line = i + 1;
        ++block_counter;

        // Optional numeric index line.
        if (is_integer(strip(lines[i])) && i + 1 < lines.size() &&
            lines[i + 1].find("-->") != std::string::npos) {
            ++i;
        }

        auto fail_block = [&](const std::string& msg) {
            result.errors.push_back({block_start_line, msg});
            while (i < lines.size() && !is_blank(lines[i])) ++i;
        };

        if (i >= lines.size() || lines[i].find("-->") == std::string::npos) {
            fail_block("block has no time range line");
            continue;
        }
        const std::string range_line = lines[i];
        const size_t arrow = range_line.find("-->");
        const auto start = parse_timecode(strip(range_line.substr(0, arrow)));
        const auto end = parse_timecode(strip(range_line.substr(arrow + 3)));
        if (!start || !end) {
            fail_block("unparseable timecode: " + strip(range_line));
            continue;
        }
        if (*end < *start) {
            fail_block("time range ends before it starts: " + strip(range_line));
            continue;
        }
        ++i;

        std::vector<std::string> text_lines;
        while (i < lines.size() && !is_blank(lines[i])) {
            text_lines.push_back(strip(lines[i]));
            ++i;
        }
        std::string text;
        for (const std::string& t : text_lines) {
            if (t.empty()) continue;
            if (!text.empty()) text += ' ';
            text += t;
        }

        Observation obs;
        obs.obs_id = doc.doc_id + "#b" + std::to_string(block_counter);
        obs.start = *start;
        obs.end = *end;
        obs.text = std::move(text);
        obs.kind = ObsKind::kSubtitleBlock;
        doc.observations.push_back(std::move(obs));
    }

    std::stable_sort(doc.observations.begin(), doc.observations.end(),
                     [](const Observation& a, const Observation& b) {
                         return a.start < b.start || (a.start == b.start && a.end < b.end);
                     });

    double last_end = 0.0;
    for (const Observation& obs : doc.observations) last_end = std::max(last_end, obs.end);
    doc.duration = options.duration.value_or(last_end);
    return result;
}

} // namespace sikta
