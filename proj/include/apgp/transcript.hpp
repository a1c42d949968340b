#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "apgp/graph.hpp"
#include "apgp/node_kind.hpp"

namespace apgp {

struct TokenUsage {
    std::int64_t prompt = 0;
    std::int64_t completion = 0;

    bool operator==(const TokenUsage&) const = default;
};

/// One provider interaction: the rendered prompt that was sent, the raw
/// response, and the parsed output the next node consumed.
struct TranscriptEntry {
    NodeId node_id;
    NodeKind node_kind = NodeKind::Define;
    std::string prompt;
    std::string response;
    std::string parsed;
    std::int64_t latency_ms = 0;
    std::optional<TokenUsage> token_usage;

    bool operator==(const TranscriptEntry&) const = default;
};

/// The complete record of one pipeline run, in execution order. Entry count
/// equals the number of provider calls made.
struct Transcript {
    std::string run_id;
    std::string started_at;
    std::string finished_at;
    std::vector<TranscriptEntry> entries;
    std::vector<std::string> warnings;

    bool operator==(const Transcript&) const = default;

    std::size_t count_kind(NodeKind kind) const;

    nlohmann::json to_json() const;
    static Transcript from_json(const nlohmann::json& j);

    /// Single-line serialization for the line-delimited transcript log.
    std::string to_jsonl_line() const;
    static Transcript from_jsonl_line(const std::string& line);
};

/// Appends one run as one line. Creates the file (and parent directories)
/// if needed.
void append_transcript(const std::filesystem::path& file, const Transcript& transcript);

std::vector<Transcript> read_transcripts(const std::filesystem::path& file);

/// Current wall-clock time as an ISO-8601 UTC string.
std::string now_utc_iso8601();

}  // namespace apgp
