#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "apgp/transcript.hpp"

namespace apgp {

enum class Role { System, User, Assistant };

std::string_view to_string(Role role);

struct ChatMessage {
    Role role = Role::User;
    std::string content;
};

/// Identifies a request for logging and scripted lookup: which run, which
/// graph node (or "judge"), and which attempt for that node within the run.
struct RequestTag {
    std::string run_id;
    std::string node;
    int attempt = 0;
};

struct ChatRequest {
    std::vector<ChatMessage> messages;
    std::string model;
    double temperature = 0.2;
    int max_output_tokens = 0;  // 0 = provider default
    RequestTag tag;
};

enum class FinishReason { Stop, Length, Other };

struct ChatResponse {
    std::string content;
    FinishReason finish_reason = FinishReason::Stop;
    std::optional<TokenUsage> token_usage;
    std::int64_t latency_ms = 0;
};

struct RetryPolicy {
    int max_attempts = 3;
    std::chrono::milliseconds base_backoff{250};
    bool jitter = true;
};

struct CacheConfig {
    bool enabled = false;
    std::filesystem::path dir;
};

struct ProviderConfig {
    std::string endpoint = "https://api.openai.com/v1/chat/completions";
    std::string model = "gpt-3.5-turbo";
    /// Name of the environment variable holding the API key. The key itself
    /// never appears in config files.
    std::string api_key_env = "APGP_API_KEY";
    std::chrono::milliseconds timeout{60000};
    RetryPolicy retry;
    CacheConfig cache;
};

/// Returns all problems with the config; empty means valid.
std::vector<std::string> validate_provider_config(const ProviderConfig& config);

/// Throws Error if the request violates its invariants (no messages, last
/// message not from the user, temperature outside [0, 2]).
void validate_request(const ChatRequest& request);

/// The single completion contract everything above the wire speaks to.
/// Implementations must be safe to call from multiple threads.
class ChatProvider {
public:
    virtual ~ChatProvider() = default;
    virtual ChatResponse complete(const ChatRequest& request) = 0;

    /// Short label for report metadata, e.g. the model name or "scripted".
    virtual std::string describe() const = 0;
};

}  // namespace apgp
