#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "apgp/graph.hpp"
#include "apgp/node_kind.hpp"

namespace apgp {

/// Half-open byte range [begin, end) inside a template body marking a
/// removable stimulation segment.
struct StimulusSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const StimulusSpan&) const = default;
};

/// A fixed framework prompt for one node kind. The body carries named
/// placeholders in single braces ({problem}, {definition}, ...); doubled
/// braces render as literal braces. Stimulus spans mark the encouragement /
/// emphasis segments that the ablation removes.
struct PromptTemplate {
    std::string id;
    NodeKind node_kind = NodeKind::Define;
    std::string body;
    std::vector<StimulusSpan> stimulus_spans;
    std::string language = "en";

    bool operator==(const PromptTemplate&) const = default;
};

using TemplateMap = std::map<NodeKind, PromptTemplate>;

/// Placeholder name -> value. Values must be non-empty after trimming.
using BindingSet = std::map<std::string, std::string>;

/// The stimulus marker strings (encouragement phrases, all-caps emphasis
/// words, exclamation-suffixed cheers) that stimulation-off renderings must
/// not contain.
struct StimulationLexicon {
    std::vector<std::string> tokens;

    bool contains_any(std::string_view text) const;
    std::vector<std::string> matches_in(std::string_view text) const;
};

enum class Stimulation { On, Off };

/// Placeholder names a template body may use, per node kind.
const std::set<std::string>& slot_vocabulary(NodeKind kind);

/// Every placeholder name recognized by the engine across all node kinds.
const std::set<std::string>& placeholder_grammar();

/// Returns the placeholder occurrences of a body in order (a multiset).
/// Throws TemplateError on malformed syntax: unbalanced braces or an empty /
/// ill-formed placeholder name.
std::vector<std::string> extract_placeholders(const std::string& body);

/// The body with all stimulus spans removed.
std::string strip_stimulation_text(const std::string& body,
                                   const std::vector<StimulusSpan>& spans);

/// Copy of the template with stimulus spans removed from the body.
PromptTemplate strip_stimulation(const PromptTemplate& tmpl);

/// Structural checks: span bounds/overlap, placeholder syntax, vocabulary
/// membership, span removal preserving the placeholder multiset. Returns all
/// violations; empty means valid.
std::vector<std::string> validate_template(const PromptTemplate& tmpl);

/// Substitutes bindings into a body with no stimulus handling. Shared by
/// render() and the judge prompt. Bindings must cover the body's placeholder
/// set exactly.
std::string render_body(const std::string& body, const BindingSet& bindings);

/// Renders a template: stimulus spans removed first when stimulation is off,
/// then placeholders substituted. Missing or surplus bindings are hard
/// errors naming the slot.
std::string render(const PromptTemplate& tmpl, const BindingSet& bindings,
                   Stimulation stimulation);

/// Builds the binding set for a node kind from the recorded upstream node
/// outputs and the original problem text, mirroring the algorithm's argument
/// lists: Define gets the problem; every later node gets the definition plus
/// its specific subject (solutions, merged solution, answer, or revised
/// solution). Throws MissingUpstreamOutputError when a required output is
/// absent.
BindingSet assemble_bindings(NodeKind kind, const std::map<NodeId, std::string>& outputs,
                             const std::string& problem);

}  // namespace apgp
