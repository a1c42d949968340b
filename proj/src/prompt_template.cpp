#include "apgp/prompt_template.hpp"

#include <algorithm>
#include <cctype>

#include "apgp/error.hpp"

namespace apgp {

namespace {

bool is_slot_char(char c) {
    return (c >= 'a' && c <= 'z') || c == '_';
}

std::string trim_copy(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    return std::string(text.substr(begin, end - begin));
}

// Walks a body, invoking on_literal for literal runs (escapes already
// resolved) and on_slot for placeholder names. Throws on malformed syntax.
template <typename LiteralFn, typename SlotFn>
void scan_body(const std::string& body, LiteralFn&& on_literal, SlotFn&& on_slot) {
    std::string literal;
    for (std::size_t i = 0; i < body.size();) {
        char c = body[i];
        if (c == '{') {
            if (i + 1 < body.size() && body[i + 1] == '{') {
                literal += '{';
                i += 2;
                continue;
            }
            std::size_t close = body.find('}', i + 1);
            if (close == std::string::npos) {
                throw TemplateError("unbalanced '{' at byte " + std::to_string(i));
            }
            std::string name = body.substr(i + 1, close - i - 1);
            if (name.empty() || !std::all_of(name.begin(), name.end(), is_slot_char)) {
                throw TemplateError("malformed placeholder '{" + name + "}' at byte " +
                                    std::to_string(i));
            }
            if (!literal.empty()) {
                on_literal(literal);
                literal.clear();
            }
            on_slot(name);
            i = close + 1;
            continue;
        }
        if (c == '}') {
            if (i + 1 < body.size() && body[i + 1] == '}') {
                literal += '}';
                i += 2;
                continue;
            }
            throw TemplateError("unbalanced '}' at byte " + std::to_string(i));
        }
        literal += c;
        ++i;
    }
    if (!literal.empty()) {
        on_literal(literal);
    }
}

}  // namespace

bool StimulationLexicon::contains_any(std::string_view text) const {
    for (const auto& token : tokens) {
        if (text.find(token) != std::string_view::npos) {
            return true;
        }
    }
    return false;
}

std::vector<std::string> StimulationLexicon::matches_in(std::string_view text) const {
    std::vector<std::string> found;
    for (const auto& token : tokens) {
        if (text.find(token) != std::string_view::npos) {
            found.push_back(token);
        }
    }
    return found;
}

const std::set<std::string>& slot_vocabulary(NodeKind kind) {
    static const std::set<std::string> define = {"problem"};
    static const std::set<std::string> generate = {"definition"};
    static const std::set<std::string> aggregate = {"definition", "solutions"};
    static const std::set<std::string> answer = {"definition", "solution"};
    static const std::set<std::string> validate = {"definition", "answer"};
    static const std::set<std::string> reanswer = {"definition", "solution"};
    switch (kind) {
    case NodeKind::Define:    return define;
    case NodeKind::Generate:  return generate;
    case NodeKind::Aggregate: return aggregate;
    case NodeKind::Answer:    return answer;
    case NodeKind::Validate:  return validate;
    case NodeKind::Reanswer:  return reanswer;
    }
    return define;
}

const std::set<std::string>& placeholder_grammar() {
    static const std::set<std::string> all = {"problem",  "definition", "solutions",
                                              "solution", "answer",     "failed_solution"};
    return all;
}

std::vector<std::string> extract_placeholders(const std::string& body) {
    std::vector<std::string> names;
    scan_body(
        body, [](const std::string&) {}, [&](const std::string& name) { names.push_back(name); });
    return names;
}

std::string strip_stimulation_text(const std::string& body,
                                   const std::vector<StimulusSpan>& spans) {
    std::vector<StimulusSpan> ordered = spans;
    std::sort(ordered.begin(), ordered.end(),
              [](const StimulusSpan& a, const StimulusSpan& b) { return a.begin < b.begin; });
    std::string result;
    result.reserve(body.size());
    std::size_t cursor = 0;
    for (const auto& span : ordered) {
        if (span.begin > body.size() || span.end > body.size() || span.begin > span.end) {
            throw TemplateError("stimulus span [" + std::to_string(span.begin) + ", " +
                                std::to_string(span.end) + ") out of bounds for body of " +
                                std::to_string(body.size()) + " bytes");
        }
        if (span.begin < cursor) {
            throw TemplateError("overlapping stimulus spans at byte " +
                                std::to_string(span.begin));
        }
        result.append(body, cursor, span.begin - cursor);
        cursor = span.end;
    }
    result.append(body, cursor, body.size() - cursor);
    return result;
}

PromptTemplate strip_stimulation(const PromptTemplate& tmpl) {
    PromptTemplate stripped = tmpl;
    stripped.body = strip_stimulation_text(tmpl.body, tmpl.stimulus_spans);
    stripped.stimulus_spans.clear();
    return stripped;
}

std::vector<std::string> validate_template(const PromptTemplate& tmpl) {
    std::vector<std::string> violations;

    std::vector<StimulusSpan> ordered = tmpl.stimulus_spans;
    std::sort(ordered.begin(), ordered.end(),
              [](const StimulusSpan& a, const StimulusSpan& b) { return a.begin < b.begin; });
    std::size_t previous_end = 0;
    for (const auto& span : ordered) {
        if (span.begin >= span.end) {
            violations.push_back("empty or inverted stimulus span at byte " +
                                 std::to_string(span.begin));
        }
        if (span.end > tmpl.body.size()) {
            violations.push_back("stimulus span ends past the body at byte " +
                                 std::to_string(span.end));
        }
        if (span.begin < previous_end) {
            violations.push_back("overlapping stimulus spans at byte " +
                                 std::to_string(span.begin));
        }
        previous_end = std::max(previous_end, span.end);
    }
    if (!violations.empty()) {
        return violations;
    }

    std::vector<std::string> with_stimulus;
    std::vector<std::string> without_stimulus;
    try {
        with_stimulus = extract_placeholders(tmpl.body);
        without_stimulus =
            extract_placeholders(strip_stimulation_text(tmpl.body, tmpl.stimulus_spans));
    } catch (const TemplateError& e) {
        violations.push_back(e.what());
        return violations;
    }

    const auto& vocabulary = slot_vocabulary(tmpl.node_kind);
    for (const auto& name : with_stimulus) {
        if (!vocabulary.count(name)) {
            std::string message = "placeholder {" + name + "} not allowed for node kind " +
                                  std::string(to_string(tmpl.node_kind));
            if (!placeholder_grammar().count(name)) {
                message = "unknown placeholder {" + name + "}";
            }
            violations.push_back(message);
        }
    }

    auto sorted_with = with_stimulus;
    auto sorted_without = without_stimulus;
    std::sort(sorted_with.begin(), sorted_with.end());
    std::sort(sorted_without.begin(), sorted_without.end());
    if (sorted_with != sorted_without) {
        violations.push_back("removing stimulus spans changes the placeholder multiset");
    }

    return violations;
}

std::string render_body(const std::string& body, const BindingSet& bindings) {
    for (const auto& [name, value] : bindings) {
        if (trim_copy(value).empty()) {
            throw TemplateError("binding for placeholder {" + name + "} is empty");
        }
    }

    std::set<std::string> used;
    std::string result;
    result.reserve(body.size() + 64);
    scan_body(
        body, [&](const std::string& literal) { result += literal; },
        [&](const std::string& name) {
            auto it = bindings.find(name);
            if (it == bindings.end()) {
                throw MissingBindingError(name);
            }
            used.insert(name);
            result += it->second;
        });

    for (const auto& [name, value] : bindings) {
        if (!used.count(name)) {
            throw SurplusBindingError(name);
        }
    }
    return result;
}

std::string render(const PromptTemplate& tmpl, const BindingSet& bindings,
                   Stimulation stimulation) {
    const std::string body = stimulation == Stimulation::Off
                                 ? strip_stimulation_text(tmpl.body, tmpl.stimulus_spans)
                                 : tmpl.body;
    return render_body(body, bindings);
}

BindingSet assemble_bindings(NodeKind kind, const std::map<NodeId, std::string>& outputs,
                             const std::string& problem) {
    auto upstream = [&](NodeKind source) -> const std::string& {
        auto it = outputs.find(canonical_node_id(source));
        if (it == outputs.end()) {
            throw MissingUpstreamOutputError(canonical_node_id(source));
        }
        return it->second;
    };

    switch (kind) {
    case NodeKind::Define:
        return {{"problem", problem}};
    case NodeKind::Generate:
        return {{"definition", upstream(NodeKind::Define)}};
    case NodeKind::Aggregate:
        return {{"definition", upstream(NodeKind::Define)},
                {"solutions", upstream(NodeKind::Generate)}};
    case NodeKind::Answer:
        return {{"definition", upstream(NodeKind::Define)},
                {"solution", upstream(NodeKind::Aggregate)}};
    case NodeKind::Validate:
        return {{"definition", upstream(NodeKind::Define)},
                {"answer", upstream(NodeKind::Answer)}};
    case NodeKind::Reanswer:
        // The validating node records the revised solution as its output.
        return {{"definition", upstream(NodeKind::Define)},
                {"solution", upstream(NodeKind::Validate)}};
    }
    throw GraphDefectError("assemble_bindings: unknown node kind");
}

}  // namespace apgp
