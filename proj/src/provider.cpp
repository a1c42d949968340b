#include "apgp/provider.hpp"

#include "apgp/error.hpp"

namespace apgp {

std::string_view to_string(Role role) {
    switch (role) {
    case Role::System:    return "system";
    case Role::User:      return "user";
    case Role::Assistant: return "assistant";
    }
    return "user";
}

std::vector<std::string> validate_provider_config(const ProviderConfig& config) {
    std::vector<std::string> problems;
    if (config.endpoint.empty()) {
        problems.push_back("endpoint is empty");
    }
    if (config.model.empty()) {
        problems.push_back("model is empty");
    }
    if (config.retry.max_attempts < 1) {
        problems.push_back("retry.max_attempts must be >= 1");
    }
    if (config.timeout.count() <= 0) {
        problems.push_back("timeout must be > 0");
    }
    if (config.cache.enabled && config.cache.dir.empty()) {
        problems.push_back("cache enabled but cache.dir is empty");
    }
    return problems;
}

void validate_request(const ChatRequest& request) {
    if (request.messages.empty()) {
        throw Error("chat request has no messages");
    }
    if (request.messages.back().role != Role::User) {
        throw Error("chat request's last message must have role user");
    }
    if (request.temperature < 0.0 || request.temperature > 2.0) {
        throw Error("chat request temperature must be in [0, 2]");
    }
}

}  // namespace apgp
