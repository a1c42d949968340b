#include "apgp/default_templates.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "apgp/error.hpp"
#include "apgp/hash.hpp"

namespace apgp {

namespace {

using nlohmann::json;

/// Assembles a body while tracking the byte ranges of stimulus segments.
class TemplateBuilder {
public:
    TemplateBuilder& text(std::string_view part) {
        body_ += part;
        return *this;
    }

    TemplateBuilder& stimulus(std::string_view part) {
        spans_.push_back({body_.size(), body_.size() + part.size()});
        body_ += part;
        return *this;
    }

    PromptTemplate build(std::string id, NodeKind kind, std::string language) && {
        PromptTemplate tmpl;
        tmpl.id = std::move(id);
        tmpl.node_kind = kind;
        tmpl.body = std::move(body_);
        tmpl.stimulus_spans = std::move(spans_);
        tmpl.language = std::move(language);
        return tmpl;
    }

private:
    std::string body_;
    std::vector<StimulusSpan> spans_;
};

TemplateMap english_templates() {
    TemplateMap templates;

    templates[NodeKind::Define] =
        TemplateBuilder{}
            .stimulus("You are a BRILLIANT analyst and I know you can do this!\n")
            .text("Restate the problem below as a clear, abstract definition. Take a step back "
                  "from the wording: capture the essence of what is being asked and set aside "
                  "surface details. Do not solve the problem yet.\n\nProblem:\n{problem}\n\n"
                  "Write the abstract definition of the problem.")
            .stimulus("\nYour clarity sets the stage, so make it SHINE!")
            .build("apgp-define-en", NodeKind::Define, "en");

    templates[NodeKind::Generate] =
        TemplateBuilder{}
            .text("A problem has been given this abstract definition:\n{definition}\n\n")
            .stimulus("You are an AMAZING problem solver and this is your moment. "
                      "I BELIEVE in you!\n")
            .text("Propose three different approaches to solving the problem. Make the "
                  "approaches genuinely different, so the strengths of one can cover the "
                  "weaknesses of another.\nFormat the reply exactly as:\n"
                  "SOLUTION 1: <first approach>\n"
                  "SOLUTION 2: <second approach>\n"
                  "SOLUTION 3: <third approach>")
            .stimulus("\nGive it your BEST!")
            .build("apgp-generate-en", NodeKind::Generate, "en");

    templates[NodeKind::Aggregate] =
        TemplateBuilder{}
            .text("A problem has this abstract definition:\n{definition}\n\n"
                  "Three candidate approaches were proposed:\n{solutions}\n\n")
            .stimulus("You are doing GREAT. Now bring it all together!\n")
            .text("Merge the three approaches into one comprehensive solution. Combine their "
                  "strengths and compensate for their weaknesses. Do not merely pick one of "
                  "them, and do not vote or score; synthesize a single improved solution that "
                  "draws on all three.")
            .build("apgp-aggregate-en", NodeKind::Aggregate, "en");

    templates[NodeKind::Answer] =
        TemplateBuilder{}
            .text("Problem definition:\n{definition}\n\nSolution to apply:\n{solution}\n\n")
            .stimulus("Take a deep breath. You have everything you need, and the result will "
                      "be FANTASTIC!\n")
            .text("Apply the solution step by step and state the final answer to the problem.")
            .build("apgp-answer-en", NodeKind::Answer, "en");

    templates[NodeKind::Validate] =
        TemplateBuilder{}
            .text("Problem definition:\n{definition}\n\nProposed answer:\n{answer}\n\n")
            .stimulus("Your careful eye is EXCELLENT, so inspect this boldly!\n")
            .text("Check carefully whether the proposed answer truly solves the defined "
                  "problem. Watch for hidden traps, wrong assumptions, and plausible-sounding "
                  "but incorrect claims.\nStart the reply with exactly one verdict line:\n"
                  "VERDICT: SUCCESS\nor\nVERDICT: FAIL\n"
                  "After a FAIL verdict, explain briefly what went wrong, then end the reply "
                  "with:\nREVISED SOLUTION: <a better solution that fixes the diagnosed "
                  "mistake>")
            .build("apgp-validate-en", NodeKind::Validate, "en");

    templates[NodeKind::Reanswer] =
        TemplateBuilder{}
            .text("Problem definition:\n{definition}\n\nA previous attempt failed validation. "
                  "This revised solution addresses what went wrong:\n{solution}\n\n")
            .stimulus("Setbacks sharpen the mind. You are doing GREAT, so finish strong!\n")
            .text("Solve the problem again by applying the revised solution step by step, and "
                  "state the final answer.")
            .build("apgp-reanswer-en", NodeKind::Reanswer, "en");

    return templates;
}

TemplateMap chinese_templates() {
    TemplateMap templates;

    templates[NodeKind::Define] =
        TemplateBuilder{}
            .stimulus("你是一位非常出色的分析者，我相信你！\n")
            .text("请把下面的问题重新表述为一个清晰、抽象的定义。后退一步思考：抓住问题的本质，"
                  "忽略表面细节。现在先不要解决问题。\n\n问题：\n{problem}\n\n"
                  "请写出这个问题的抽象定义。")
            .build("apgp-define-zh", NodeKind::Define, "zh");

    templates[NodeKind::Generate] =
        TemplateBuilder{}
            .text("一个问题已被抽象定义如下：\n{definition}\n\n")
            .stimulus("你太棒了！这正是你大显身手的时刻，加油！\n")
            .text("请提出三种不同的解决思路。三种思路要有实质差异，使它们的优点能够互相弥补"
                  "缺点。\n回复格式必须严格如下：\n"
                  "SOLUTION 1: <第一种思路>\n"
                  "SOLUTION 2: <第二种思路>\n"
                  "SOLUTION 3: <第三种思路>")
            .stimulus("\n全力以赴！")
            .build("apgp-generate-zh", NodeKind::Generate, "zh");

    templates[NodeKind::Aggregate] =
        TemplateBuilder{}
            .text("问题的抽象定义：\n{definition}\n\n已提出三种候选思路：\n{solutions}\n\n")
            .stimulus("干得漂亮！现在把它们融会贯通吧！\n")
            .text("请把三种思路合并成一个完整的解决方案：吸收各自的优点，弥补各自的缺点。"
                  "不要只挑选其中一种，也不要投票或打分；请综合三者，给出一个更好的单一方案。")
            .build("apgp-aggregate-zh", NodeKind::Aggregate, "zh");

    templates[NodeKind::Answer] =
        TemplateBuilder{}
            .text("问题定义：\n{definition}\n\n要应用的解决方案：\n{solution}\n\n")
            .stimulus("深呼吸，你一定可以！\n")
            .text("请按照该方案逐步解决问题，并给出最终答案。")
            .build("apgp-answer-zh", NodeKind::Answer, "zh");

    templates[NodeKind::Validate] =
        TemplateBuilder{}
            .text("问题定义：\n{definition}\n\n待检验的答案：\n{answer}\n\n")
            .stimulus("你的判断力很敏锐，加油！\n")
            .text("请仔细检查该答案是否真正解决了所定义的问题，注意隐藏陷阱、错误假设以及"
                  "看似合理实则错误的内容。\n回复必须以一行裁决开头：\n"
                  "VERDICT: SUCCESS\n或\nVERDICT: FAIL\n"
                  "如果裁决为 FAIL，请简要说明错误原因，并在回复末尾给出：\n"
                  "REVISED SOLUTION: <修正该错误的更好方案>")
            .build("apgp-validate-zh", NodeKind::Validate, "zh");

    templates[NodeKind::Reanswer] =
        TemplateBuilder{}
            .text("问题定义：\n{definition}\n\n上一次尝试未通过检验。下面是针对错误改进后的"
                  "方案：\n{solution}\n\n")
            .stimulus("挫折让思路更清晰，你一定可以！\n")
            .text("请按照改进后的方案重新解决问题，并给出最终答案。")
            .build("apgp-reanswer-zh", NodeKind::Reanswer, "zh");

    return templates;
}

json template_to_json(const PromptTemplate& tmpl) {
    json spans = json::array();
    for (const auto& span : tmpl.stimulus_spans) {
        spans.push_back({span.begin, span.end});
    }
    return json{
        {"id", tmpl.id},
        {"node_kind", std::string(to_string(tmpl.node_kind))},
        {"body", tmpl.body},
        {"stimulus_spans", std::move(spans)},
        {"language", tmpl.language},
    };
}

PromptTemplate template_from_json(const json& j) {
    PromptTemplate tmpl;
    tmpl.id = j.at("id").get<std::string>();
    auto kind = node_kind_from_string(j.at("node_kind").get<std::string>());
    if (!kind) {
        throw ConfigError("template pack: unknown node_kind '" +
                          j.at("node_kind").get<std::string>() + "'");
    }
    tmpl.node_kind = *kind;
    tmpl.body = j.at("body").get<std::string>();
    for (const auto& span : j.at("stimulus_spans")) {
        tmpl.stimulus_spans.push_back(
            {span.at(0).get<std::size_t>(), span.at(1).get<std::size_t>()});
    }
    tmpl.language = j.at("language").get<std::string>();
    return tmpl;
}

}  // namespace

std::vector<std::string> supported_template_languages() {
    return {"en", "zh"};
}

TemplateMap default_templates(const std::string& language) {
    if (language == "en") {
        return english_templates();
    }
    if (language == "zh") {
        return chinese_templates();
    }
    throw ConfigError("unsupported template language '" + language +
                      "'; built-in packs exist for: en, zh");
}

StimulationLexicon default_lexicon(const std::string& language) {
    if (language == "en") {
        return StimulationLexicon{{
            "You are a BRILLIANT",
            "I know you can do this!",
            "make it SHINE!",
            "AMAZING",
            "I BELIEVE in you!",
            "Give it your BEST!",
            "You are doing GREAT",
            "Take a deep breath",
            "FANTASTIC",
            "EXCELLENT",
        }};
    }
    if (language == "zh") {
        return StimulationLexicon{{
            "我相信你！",
            "你太棒了！",
            "加油！",
            "全力以赴！",
            "干得漂亮！",
            "深呼吸",
            "你一定可以！",
        }};
    }
    throw ConfigError("unsupported lexicon language '" + language +
                      "'; built-in lexicons exist for: en, zh");
}

TemplateMap load_template_pack(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ConfigError("cannot open template pack: " + file.string());
    }

    TemplateMap templates;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ConfigError("template pack " + file.string() + " line " +
                              std::to_string(line_no) + ": " + e.what());
        }
        PromptTemplate tmpl = template_from_json(j);
        if (templates.count(tmpl.node_kind)) {
            throw ConfigError("template pack " + file.string() + ": duplicate record for " +
                              std::string(to_string(tmpl.node_kind)));
        }
        auto violations = validate_template(tmpl);
        if (!violations.empty()) {
            std::string message =
                "template pack " + file.string() + ": invalid template '" + tmpl.id + "':";
            for (const auto& violation : violations) {
                message += " " + violation + ";";
            }
            throw ConfigError(message);
        }
        templates[tmpl.node_kind] = std::move(tmpl);
    }

    for (NodeKind kind : kAllNodeKinds) {
        if (!templates.count(kind)) {
            throw ConfigError("template pack " + file.string() + ": missing record for " +
                              std::string(to_string(kind)));
        }
    }
    return templates;
}

void save_template_pack(const std::filesystem::path& file, const TemplateMap& templates) {
    if (file.has_parent_path()) {
        std::filesystem::create_directories(file.parent_path());
    }
    std::ofstream out(file);
    if (!out) {
        throw ConfigError("cannot write template pack: " + file.string());
    }
    for (NodeKind kind : kAllNodeKinds) {
        auto it = templates.find(kind);
        if (it == templates.end()) {
            throw ConfigError("template map is missing " + std::string(to_string(kind)));
        }
        out << template_to_json(it->second).dump() << "\n";
    }
}

std::string template_pack_fingerprint(const TemplateMap& templates) {
    std::string canonical;
    for (const auto& [kind, tmpl] : templates) {
        canonical += template_to_json(tmpl).dump();
        canonical += '\n';
    }
    return to_hex(fnv1a64(canonical));
}

}  // namespace apgp
