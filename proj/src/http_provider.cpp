#include "apgp/http_provider.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <regex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "apgp/error.hpp"

namespace apgp {

namespace {

using nlohmann::json;

std::chrono::milliseconds backoff_delay(const RetryPolicy& retry, int attempt) {
    auto delay = retry.base_backoff * (1LL << (attempt - 1));
    if (retry.jitter) {
        thread_local std::mt19937 rng{std::random_device{}()};
        std::uniform_real_distribution<double> factor(0.5, 1.5);
        delay = std::chrono::milliseconds(
            static_cast<std::int64_t>(static_cast<double>(delay.count()) * factor(rng)));
    }
    return delay;
}

bool is_timeout(httplib::Error error) {
    return error == httplib::Error::ConnectionTimeout || error == httplib::Error::Read ||
           error == httplib::Error::Write;
}

json build_request_body(const ChatRequest& request, const std::string& model) {
    json messages = json::array();
    for (const auto& message : request.messages) {
        messages.push_back({{"role", std::string(to_string(message.role))},
                            {"content", message.content}});
    }
    json body = {
        {"model", model},
        {"messages", std::move(messages)},
        {"temperature", request.temperature},
    };
    if (request.max_output_tokens > 0) {
        body["max_tokens"] = request.max_output_tokens;
    }
    return body;
}

ChatResponse parse_response_body(const std::string& body, std::int64_t latency_ms) {
    json j;
    try {
        j = json::parse(body);
    } catch (const json::exception& e) {
        throw ProtocolError(std::string("response body is not valid JSON: ") + e.what());
    }

    ChatResponse response;
    response.latency_ms = latency_ms;
    try {
        const json& choice = j.at("choices").at(0);
        response.content = choice.at("message").at("content").get<std::string>();
        std::string reason = choice.value("finish_reason", "stop");
        if (reason == "stop") {
            response.finish_reason = FinishReason::Stop;
        } else if (reason == "length") {
            response.finish_reason = FinishReason::Length;
        } else {
            response.finish_reason = FinishReason::Other;
        }
    } catch (const json::exception& e) {
        throw ProtocolError(std::string("response body lacks choices[0].message.content: ") +
                            e.what());
    }
    if (j.contains("usage") && j["usage"].is_object()) {
        TokenUsage usage;
        usage.prompt = j["usage"].value("prompt_tokens", std::int64_t{0});
        usage.completion = j["usage"].value("completion_tokens", std::int64_t{0});
        response.token_usage = usage;
    }
    return response;
}

}  // namespace

std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
    static const std::regex pattern(R"(^(https?://[^/]+)(/.*)?$)", std::regex::icase);
    std::smatch match;
    if (!std::regex_match(endpoint, match, pattern)) {
        throw ConfigError("endpoint is not a valid http(s) URL: " + endpoint);
    }
    std::string path = match[2].matched ? match[2].str() : "/";
    return {match[1].str(), path};
}

HttpProvider::HttpProvider(ProviderConfig config) : config_(std::move(config)) {
    auto problems = validate_provider_config(config_);
    if (!problems.empty()) {
        std::string message = "invalid provider config:";
        for (const auto& problem : problems) {
            message += " " + problem + ";";
        }
        throw ConfigError(message);
    }
    split_endpoint(config_.endpoint);  // fail fast on malformed URLs
}

ChatResponse HttpProvider::complete(const ChatRequest& request) {
    validate_request(request);

    auto [base, path] = split_endpoint(config_.endpoint);
    const std::string body =
        build_request_body(request, request.model.empty() ? config_.model : request.model)
            .dump();

    httplib::Headers headers;
    if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key) {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }

    const int max_attempts = config_.retry.max_attempts;
    std::string last_failure;
    bool last_was_timeout = false;
    bool last_was_rate_limit = false;

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        if (attempt > 1) {
            std::this_thread::sleep_for(backoff_delay(config_.retry, attempt - 1));
        }

        // One client per call: httplib clients are not safe for concurrent
        // use and benchmark workers share this provider.
        httplib::Client client(base);
        client.set_connection_timeout(config_.timeout);
        client.set_read_timeout(config_.timeout);
        client.set_write_timeout(config_.timeout);

        auto started = std::chrono::steady_clock::now();
        httplib::Result result = client.Post(path, headers, body, "application/json");
        auto latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();

        if (!result) {
            last_failure = httplib::to_string(result.error());
            last_was_timeout = is_timeout(result.error());
            last_was_rate_limit = false;
            continue;
        }

        const int status = result->status;
        if (status == 200) {
            return parse_response_body(result->body, latency_ms);
        }
        if (status == 401 || status == 403) {
            throw AuthError("authentication rejected (HTTP " + std::to_string(status) +
                            "); check the " + config_.api_key_env + " environment variable");
        }
        if (status == 429 || status >= 500) {
            last_failure = "HTTP " + std::to_string(status);
            last_was_timeout = false;
            last_was_rate_limit = status == 429;
            continue;
        }
        throw ProtocolError("endpoint rejected the request: HTTP " + std::to_string(status) +
                            " " + result->body);
    }

    const std::string message = "request failed after " + std::to_string(max_attempts) +
                                " attempts; last failure: " + last_failure;
    if (last_was_rate_limit) {
        throw RateLimitedError(message);
    }
    if (last_was_timeout) {
        throw TimeoutError(message);
    }
    throw ProviderError(message);
}

}  // namespace apgp
