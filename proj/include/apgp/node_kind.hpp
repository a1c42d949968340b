#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace apgp {

/// The six node kinds of the reasoning graph. The canonical graph contains
/// exactly one node of each kind.
enum class NodeKind {
    Define,     ///< abstract the raw problem into a clear definition
    Generate,   ///< propose three candidate solutions
    Aggregate,  ///< merge the candidates into one solution
    Answer,     ///< apply the merged solution and answer
    Validate,   ///< check the answer, emit a verdict (and a revised solution on failure)
    Reanswer,   ///< answer again from the revised solution after a failed validation
};

inline constexpr std::array<NodeKind, 6> kAllNodeKinds = {
    NodeKind::Define,   NodeKind::Generate, NodeKind::Aggregate,
    NodeKind::Answer,   NodeKind::Validate, NodeKind::Reanswer,
};

constexpr std::string_view to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::Define:    return "Define";
    case NodeKind::Generate:  return "Generate";
    case NodeKind::Aggregate: return "Aggregate";
    case NodeKind::Answer:    return "Answer";
    case NodeKind::Validate:  return "Validate";
    case NodeKind::Reanswer:  return "Reanswer";
    }
    return "Unknown";
}

std::optional<NodeKind> node_kind_from_string(std::string_view name);

}  // namespace apgp
