#pragma once

#include "apgp/provider.hpp"

namespace apgp {

/// Chat-completions HTTP client. Speaks the de-facto JSON shape (messages
/// array in, choices[0].message.content out) so any compatible endpoint
/// works. Transient failures (timeouts, 429, 5xx) are retried with
/// exponential backoff up to retry.max_attempts; other 4xx and malformed
/// bodies fail immediately.
class HttpProvider : public ChatProvider {
public:
    explicit HttpProvider(ProviderConfig config);

    ChatResponse complete(const ChatRequest& request) override;
    std::string describe() const override { return config_.model; }

    const ProviderConfig& config() const { return config_; }

private:
    ProviderConfig config_;
};

/// Splits an endpoint URL into (scheme://host[:port], path). Throws
/// ConfigError on anything unparseable.
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint);

}  // namespace apgp
