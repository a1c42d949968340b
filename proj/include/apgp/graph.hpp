#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "apgp/node_kind.hpp"

namespace apgp {

using NodeId = std::string;

enum class EdgeKind { Normal, Backtrack };

struct GraphNode {
    NodeId id;
    NodeKind kind;
};

struct GraphEdge {
    NodeId from;
    NodeId to;
    EdgeKind kind = EdgeKind::Normal;
};

/// The fixed reasoning graph: a sequential chain of nodes with a single
/// backtrack edge from the validating node to the re-answering node.
struct PipelineGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    NodeId entry;
    std::set<NodeId> exits;
    int max_backtracks = 1;

    const GraphNode* find_node(const NodeId& id) const;
    const GraphNode* find_by_kind(NodeKind kind) const;
    std::optional<NodeId> normal_successor(const NodeId& id) const;
    std::optional<NodeId> backtrack_target(const NodeId& id) const;
    std::size_t normal_edge_count() const;
    std::size_t backtrack_edge_count() const;
};

/// Stable node id used by the canonical graph for each kind.
NodeId canonical_node_id(NodeKind kind);

/// Builds the canonical six-node graph:
///   define -> generate -> aggregate -> answer -> validate,
/// a backtrack edge validate -> reanswer, and a normal edge
/// reanswer -> validate mirroring the answering node's outgoing edge
/// (structural only; runs exit at the reanswer node).
/// Exits are {validate, reanswer}.
PipelineGraph build_apgp_graph(int max_backtracks = 1);

/// Checks structural well-formedness. Returns every violation found, not
/// only the first; an empty vector means the graph is valid.
std::vector<std::string> validate_graph(const PipelineGraph& graph);

}  // namespace apgp
