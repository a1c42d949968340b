#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "apgp/prompt_template.hpp"

namespace apgp {

/// Language tags with built-in template packs: "en" and "zh".
std::vector<std::string> supported_template_languages();

/// The built-in framework prompts for all six node kinds. Throws ConfigError
/// for an unsupported language tag.
TemplateMap default_templates(const std::string& language);

/// The stimulus tokens the built-in templates of a language draw from.
StimulationLexicon default_lexicon(const std::string& language);

/// Template pack file: line-delimited, one record per node kind with fields
/// id, node_kind, body, stimulus_spans, language.
TemplateMap load_template_pack(const std::filesystem::path& file);
void save_template_pack(const std::filesystem::path& file, const TemplateMap& templates);

/// Stable fingerprint of a pack for run-report metadata.
std::string template_pack_fingerprint(const TemplateMap& templates);

}  // namespace apgp
