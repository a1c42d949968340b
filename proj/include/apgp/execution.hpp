#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "apgp/error.hpp"
#include "apgp/graph.hpp"
#include "apgp/transcript.hpp"

namespace apgp {

/// Per-run mutable state. One instance per execution; never shared.
struct ExecutionState {
    std::map<NodeId, std::string> outputs;
    std::map<NodeId, int> visit_counts;
    NodeId current;
    int backtracks_used = 0;
};

/// Control signal a handler may attach to its result. Only handlers of
/// Validate nodes return anything other than None.
enum class NodeSignal {
    None,
    ValidationSuccess,
    ValidationFailure,
    ValidationUnparseable,
};

/// One provider interaction performed by a handler; becomes one transcript
/// entry.
struct NodeCall {
    std::string prompt;
    std::string response;
    std::string parsed;
    std::int64_t latency_ms = 0;
    std::optional<TokenUsage> token_usage;
};

struct NodeResult {
    /// Recorded into ExecutionState.outputs and consumed by successors.
    std::string output;
    NodeSignal signal = NodeSignal::None;
    /// Normally exactly one call; the generate recovery re-ask adds a second.
    std::vector<NodeCall> calls;
    std::vector<std::string> warnings;
};

using NodeHandler = std::function<NodeResult(const ExecutionState&, const std::string& input)>;
using HandlerMap = std::map<NodeKind, NodeHandler>;

struct ExecutionOutcome {
    std::string final_output;
    Transcript transcript;
    /// Signal of the last Validate visit, None if the graph has no Validate
    /// node on the taken path.
    NodeSignal validate_signal = NodeSignal::None;
    int backtracks_used = 0;
};

/// Thrown when a handler fails mid-run. Carries the partial transcript of
/// everything executed before the failure.
class ExecutionAbortedError : public Error {
public:
    ExecutionAbortedError(const std::string& message, Transcript partial)
        : Error(message), partial_(std::move(partial)) {}
    const Transcript& partial_transcript() const { return partial_; }

private:
    Transcript partial_;
};

/// Runs the graph from its entry node. Each visited node's handler is
/// invoked with the accumulated state and the original input; its output is
/// recorded before any successor runs. A ValidationFailure signal traverses
/// the backtrack edge while budget remains; otherwise execution stops at the
/// validating node and the final output is the output of the node that fed
/// it. Any other exit node returns its own output.
///
/// Throws GraphDefectError if the graph fails validate_graph, a handler is
/// missing, or the visit ceiling (node count + max_backtracks) is exceeded.
/// Handler exceptions are rethrown as ExecutionAbortedError with the partial
/// transcript attached.
ExecutionOutcome execute(const PipelineGraph& graph, const HandlerMap& handlers,
                         const std::string& input, const std::string& run_id);

}  // namespace apgp
