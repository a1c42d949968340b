#include "apgp/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "apgp/error.hpp"

namespace apgp {

std::optional<NodeKind> node_kind_from_string(std::string_view name) {
    for (NodeKind kind : kAllNodeKinds) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

const GraphNode* PipelineGraph::find_node(const NodeId& id) const {
    for (const auto& node : nodes) {
        if (node.id == id) {
            return &node;
        }
    }
    return nullptr;
}

const GraphNode* PipelineGraph::find_by_kind(NodeKind kind) const {
    for (const auto& node : nodes) {
        if (node.kind == kind) {
            return &node;
        }
    }
    return nullptr;
}

std::optional<NodeId> PipelineGraph::normal_successor(const NodeId& id) const {
    for (const auto& edge : edges) {
        if (edge.kind == EdgeKind::Normal && edge.from == id) {
            return edge.to;
        }
    }
    return std::nullopt;
}

std::optional<NodeId> PipelineGraph::backtrack_target(const NodeId& id) const {
    for (const auto& edge : edges) {
        if (edge.kind == EdgeKind::Backtrack && edge.from == id) {
            return edge.to;
        }
    }
    return std::nullopt;
}

std::size_t PipelineGraph::normal_edge_count() const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const GraphEdge& e) {
        return e.kind == EdgeKind::Normal;
    }));
}

std::size_t PipelineGraph::backtrack_edge_count() const {
    return edges.size() - normal_edge_count();
}

NodeId canonical_node_id(NodeKind kind) {
    switch (kind) {
    case NodeKind::Define:    return "define";
    case NodeKind::Generate:  return "generate";
    case NodeKind::Aggregate: return "aggregate";
    case NodeKind::Answer:    return "answer";
    case NodeKind::Validate:  return "validate";
    case NodeKind::Reanswer:  return "reanswer";
    }
    return "unknown";
}

PipelineGraph build_apgp_graph(int max_backtracks) {
    if (max_backtracks < 0) {
        throw ConfigError("max_backtracks must be >= 0, got " + std::to_string(max_backtracks));
    }

    PipelineGraph graph;
    for (NodeKind kind : kAllNodeKinds) {
        graph.nodes.push_back({canonical_node_id(kind), kind});
    }

    const NodeId define = canonical_node_id(NodeKind::Define);
    const NodeId generate = canonical_node_id(NodeKind::Generate);
    const NodeId aggregate = canonical_node_id(NodeKind::Aggregate);
    const NodeId answer = canonical_node_id(NodeKind::Answer);
    const NodeId validate = canonical_node_id(NodeKind::Validate);
    const NodeId reanswer = canonical_node_id(NodeKind::Reanswer);

    graph.edges = {
        {define, generate, EdgeKind::Normal},
        {generate, aggregate, EdgeKind::Normal},
        {aggregate, answer, EdgeKind::Normal},
        {answer, validate, EdgeKind::Normal},
        {reanswer, validate, EdgeKind::Normal},
        {validate, reanswer, EdgeKind::Backtrack},
    };
    graph.entry = define;
    graph.exits = {validate, reanswer};
    graph.max_backtracks = max_backtracks;
    return graph;
}

std::vector<std::string> validate_graph(const PipelineGraph& graph) {
    std::vector<std::string> violations;

    if (graph.nodes.empty()) {
        violations.push_back("graph has no nodes");
        return violations;
    }
    if (graph.max_backtracks < 0) {
        violations.push_back("max_backtracks is negative");
    }

    std::set<NodeId> ids;
    for (const auto& node : graph.nodes) {
        if (!ids.insert(node.id).second) {
            violations.push_back("duplicate node id " + node.id);
        }
    }

    for (const auto& edge : graph.edges) {
        if (!ids.count(edge.from)) {
            violations.push_back("edge references unknown node " + edge.from);
        }
        if (!ids.count(edge.to)) {
            violations.push_back("edge references unknown node " + edge.to);
        }
    }

    if (!ids.count(graph.entry)) {
        violations.push_back("entry node " + graph.entry + " does not exist");
        return violations;
    }

    for (const auto& edge : graph.edges) {
        if (edge.kind == EdgeKind::Normal && edge.to == graph.entry) {
            violations.push_back("entry node " + graph.entry + " has an incoming normal edge");
        }
    }

    // Per-node edge discipline: execution follows at most one normal
    // successor and at most one backtrack edge.
    std::map<NodeId, int> normal_out;
    std::map<NodeId, int> backtrack_out;
    for (const auto& edge : graph.edges) {
        if (edge.kind == EdgeKind::Normal) {
            normal_out[edge.from]++;
        } else {
            backtrack_out[edge.from]++;
        }
    }
    for (const auto& [id, count] : normal_out) {
        if (count > 1) {
            violations.push_back("node " + id + " has " + std::to_string(count) +
                                 " normal successors; at most 1 allowed");
        }
    }
    for (const auto& [id, count] : backtrack_out) {
        if (count > 1) {
            violations.push_back("node " + id + " has " + std::to_string(count) +
                                 " backtrack edges; at most 1 allowed");
        }
    }

    // Reachability from entry over all edge kinds.
    std::set<NodeId> reached;
    std::deque<NodeId> frontier{graph.entry};
    reached.insert(graph.entry);
    while (!frontier.empty()) {
        NodeId current = frontier.front();
        frontier.pop_front();
        for (const auto& edge : graph.edges) {
            if (edge.from == current && reached.insert(edge.to).second) {
                frontier.push_back(edge.to);
            }
        }
    }
    for (const auto& node : graph.nodes) {
        if (!reached.count(node.id)) {
            violations.push_back("unreachable node " + node.id);
        }
    }

    if (graph.exits.empty()) {
        violations.push_back("graph has no exit nodes");
    }
    for (const auto& exit : graph.exits) {
        if (!ids.count(exit)) {
            violations.push_back("exit node " + exit + " does not exist");
        }
    }

    // A node that is neither an exit nor a source of a normal edge strands
    // execution.
    for (const auto& node : graph.nodes) {
        if (!graph.exits.count(node.id) && normal_out[node.id] == 0) {
            violations.push_back("node " + node.id + " is not an exit and has no normal successor");
        }
    }

    return violations;
}

}  // namespace apgp
