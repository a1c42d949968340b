#include "apgp/execution.hpp"

#include <sstream>

namespace apgp {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out << sep;
        }
        out << parts[i];
    }
    return out.str();
}

}  // namespace

ExecutionOutcome execute(const PipelineGraph& graph, const HandlerMap& handlers,
                         const std::string& input, const std::string& run_id) {
    auto violations = validate_graph(graph);
    if (!violations.empty()) {
        throw GraphDefectError("graph failed validation: " + join(violations, "; "));
    }
    for (const auto& node : graph.nodes) {
        if (!handlers.count(node.kind)) {
            throw GraphDefectError("no handler for node kind " +
                                   std::string(to_string(node.kind)));
        }
    }

    ExecutionOutcome outcome;
    outcome.transcript.run_id = run_id;
    outcome.transcript.started_at = now_utc_iso8601();

    ExecutionState state;
    state.current = graph.entry;

    const int visit_ceiling = static_cast<int>(graph.nodes.size()) + graph.max_backtracks;
    int visits = 0;
    NodeId previous;

    while (true) {
        if (++visits > visit_ceiling) {
            throw GraphDefectError("execution exceeded the visit ceiling of " +
                                   std::to_string(visit_ceiling) +
                                   " nodes; engine defect, aborting instead of looping");
        }

        const GraphNode* node = graph.find_node(state.current);
        NodeResult result;
        try {
            result = handlers.at(node->kind)(state, input);
        } catch (const std::exception& e) {
            outcome.transcript.finished_at = now_utc_iso8601();
            throw ExecutionAbortedError("node '" + state.current + "' failed: " + e.what(),
                                        outcome.transcript);
        }

        for (const auto& call : result.calls) {
            TranscriptEntry entry;
            entry.node_id = state.current;
            entry.node_kind = node->kind;
            entry.prompt = call.prompt;
            entry.response = call.response;
            entry.parsed = call.parsed;
            entry.latency_ms = call.latency_ms;
            entry.token_usage = call.token_usage;
            outcome.transcript.entries.push_back(std::move(entry));
        }
        for (const auto& warning : result.warnings) {
            outcome.transcript.warnings.push_back(state.current + ": " + warning);
        }
        state.outputs[state.current] = result.output;
        state.visit_counts[state.current] += 1;

        if (node->kind == NodeKind::Validate) {
            outcome.validate_signal = result.signal;
            auto target = graph.backtrack_target(state.current);
            if (result.signal == NodeSignal::ValidationFailure && target &&
                state.backtracks_used < graph.max_backtracks) {
                state.backtracks_used += 1;
                previous = state.current;
                state.current = *target;
                continue;
            }
            // Success, unparseable verdict, or exhausted budget: the run's
            // final output is the answer that was validated, i.e. the output
            // of the node execution arrived from.
            if (previous.empty() || !state.outputs.count(previous)) {
                throw GraphDefectError("validating node " + state.current +
                                       " has no recorded predecessor output");
            }
            outcome.final_output = state.outputs.at(previous);
            break;
        }

        if (graph.exits.count(state.current)) {
            outcome.final_output = result.output;
            break;
        }

        auto next = graph.normal_successor(state.current);
        if (!next) {
            throw GraphDefectError("node " + state.current +
                                   " has no successor and is not an exit");
        }
        previous = state.current;
        state.current = *next;
    }

    outcome.backtracks_used = state.backtracks_used;
    outcome.transcript.finished_at = now_utc_iso8601();
    return outcome;
}

}  // namespace apgp
