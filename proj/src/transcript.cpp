#include "apgp/transcript.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "apgp/error.hpp"

namespace apgp {

using nlohmann::json;

std::size_t Transcript::count_kind(NodeKind kind) const {
    std::size_t count = 0;
    for (const auto& entry : entries) {
        if (entry.node_kind == kind) {
            ++count;
        }
    }
    return count;
}

json Transcript::to_json() const {
    json entries_json = json::array();
    for (const auto& entry : entries) {
        json e = {
            {"node_id", entry.node_id},
            {"node_kind", std::string(to_string(entry.node_kind))},
            {"prompt", entry.prompt},
            {"response", entry.response},
            {"parsed", entry.parsed},
            {"latency_ms", entry.latency_ms},
        };
        if (entry.token_usage) {
            e["token_usage"] = {{"prompt", entry.token_usage->prompt},
                                {"completion", entry.token_usage->completion}};
        }
        entries_json.push_back(std::move(e));
    }
    json j = {
        {"run_id", run_id},
        {"started_at", started_at},
        {"finished_at", finished_at},
        {"entries", std::move(entries_json)},
    };
    if (!warnings.empty()) {
        j["warnings"] = warnings;
    }
    return j;
}

Transcript Transcript::from_json(const json& j) {
    Transcript t;
    t.run_id = j.at("run_id").get<std::string>();
    t.started_at = j.value("started_at", "");
    t.finished_at = j.value("finished_at", "");
    for (const auto& e : j.at("entries")) {
        TranscriptEntry entry;
        entry.node_id = e.at("node_id").get<std::string>();
        auto kind = node_kind_from_string(e.at("node_kind").get<std::string>());
        if (!kind) {
            throw Error("transcript entry has unknown node_kind '" +
                        e.at("node_kind").get<std::string>() + "'");
        }
        entry.node_kind = *kind;
        entry.prompt = e.at("prompt").get<std::string>();
        entry.response = e.at("response").get<std::string>();
        entry.parsed = e.at("parsed").get<std::string>();
        entry.latency_ms = e.at("latency_ms").get<std::int64_t>();
        if (e.contains("token_usage")) {
            TokenUsage usage;
            usage.prompt = e["token_usage"].at("prompt").get<std::int64_t>();
            usage.completion = e["token_usage"].at("completion").get<std::int64_t>();
            entry.token_usage = usage;
        }
        t.entries.push_back(std::move(entry));
    }
    if (j.contains("warnings")) {
        t.warnings = j["warnings"].get<std::vector<std::string>>();
    }
    return t;
}

std::string Transcript::to_jsonl_line() const {
    return to_json().dump();
}

Transcript Transcript::from_jsonl_line(const std::string& line) {
    json j = json::parse(line);
    return from_json(j);
}

void append_transcript(const std::filesystem::path& file, const Transcript& transcript) {
    if (file.has_parent_path()) {
        std::filesystem::create_directories(file.parent_path());
    }
    std::ofstream out(file, std::ios::app);
    if (!out) {
        throw Error("cannot open transcript file for append: " + file.string());
    }
    out << transcript.to_jsonl_line() << "\n";
}

std::vector<Transcript> read_transcripts(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw Error("cannot open transcript file: " + file.string());
    }
    std::vector<Transcript> runs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            runs.push_back(Transcript::from_jsonl_line(line));
        } catch (const std::exception& e) {
            throw Error("transcript file " + file.string() + " line " + std::to_string(line_no) +
                        ": " + e.what());
        }
    }
    return runs;
}

std::string now_utc_iso8601() {
    auto now = std::chrono::system_clock::now();
    auto time = std::chrono::system_clock::to_time_t(now);
    auto millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() %
        1000;
    std::tm tm{};
    gmtime_r(&time, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%S") << '.' << std::setw(3) << std::setfill('0')
        << millis << 'Z';
    return out.str();
}

}  // namespace apgp
