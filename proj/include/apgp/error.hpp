#pragma once

#include <stdexcept>
#include <string>

namespace apgp {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad config file, unknown keys, out-of-range values.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed template body, missing or surplus placeholder bindings.
class TemplateError : public Error {
public:
    using Error::Error;
};

class MissingBindingError : public TemplateError {
public:
    explicit MissingBindingError(const std::string& slot)
        : TemplateError("missing binding for placeholder {" + slot + "}"), slot_(slot) {}
    const std::string& slot() const { return slot_; }

private:
    std::string slot_;
};

class SurplusBindingError : public TemplateError {
public:
    explicit SurplusBindingError(const std::string& slot)
        : TemplateError("surplus binding for placeholder {" + slot + "} not used by template"),
          slot_(slot) {}
    const std::string& slot() const { return slot_; }

private:
    std::string slot_;
};

/// Transport-level failure talking to a chat model.
class ProviderError : public Error {
public:
    using Error::Error;
};

class TimeoutError : public ProviderError {
public:
    using ProviderError::ProviderError;
};

class RateLimitedError : public ProviderError {
public:
    using ProviderError::ProviderError;
};

class AuthError : public ProviderError {
public:
    using ProviderError::ProviderError;
};

class ProtocolError : public ProviderError {
public:
    using ProviderError::ProviderError;
};

/// A scripted provider was asked for a (node, attempt) pair the script does not cover.
class MissingScriptEntryError : public ProviderError {
public:
    MissingScriptEntryError(const std::string& node, int attempt)
        : ProviderError("no script entry for (" + node + ", attempt " + std::to_string(attempt) +
                        ")"),
          node_(node), attempt_(attempt) {}
    const std::string& node() const { return node_; }
    int attempt() const { return attempt_; }

private:
    std::string node_;
    int attempt_;
};

/// Pipeline-level failure: a node produced unusable output.
class PipelineError : public Error {
public:
    using Error::Error;
};

class EmptyNodeOutputError : public PipelineError {
public:
    explicit EmptyNodeOutputError(const std::string& node)
        : PipelineError("node '" + node + "' returned empty output"), node_(node) {}
    const std::string& node() const { return node_; }

private:
    std::string node_;
};

class MalformedSolutionsError : public PipelineError {
public:
    explicit MalformedSolutionsError(std::string raw)
        : PipelineError("could not parse any enumerated solution from model output"),
          raw_(std::move(raw)) {}
    const std::string& raw_text() const { return raw_; }

private:
    std::string raw_;
};

/// A node handler ran before its required upstream output was recorded.
class MissingUpstreamOutputError : public PipelineError {
public:
    explicit MissingUpstreamOutputError(const std::string& node)
        : PipelineError("upstream output of node '" + node +
                        "' is missing; engine ordering defect"),
          node_(node) {}
    const std::string& node() const { return node_; }

private:
    std::string node_;
};

/// Unreadable or structurally invalid dataset file.
class DatasetError : public Error {
public:
    using Error::Error;
};

/// Internal invariant violation in the execution engine. Never expected in
/// normal operation; indicates a defect, not bad input.
class GraphDefectError : public Error {
public:
    using Error::Error;
};

}  // namespace apgp
