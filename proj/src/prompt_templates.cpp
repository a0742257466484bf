#include "swproc/prompt_templates.hpp"

#include <algorithm>
#include <filesystem>

#include "swproc/json_io.hpp"

namespace swproc {

namespace fs = std::filesystem;

const std::vector<std::string> kAllowedPlaceholders = {
    "project_name",  "requirements",   "target_language", "prd",
    "detailed_design", "sprint_context", "prior_artifacts",
};

namespace {

constexpr const char* kElisionMarker = "...[earlier artifacts truncated]\n\n";

struct Token {
    bool is_placeholder;
    std::string text;
};

std::vector<Token> tokenize(const std::string& body) {
    std::vector<Token> tokens;
    std::string literal;
    for (std::size_t i = 0; i < body.size();) {
        const char c = body[i];
        if (c == '{') {
            if (i + 1 < body.size() && body[i + 1] == '{') {
                literal.push_back('{');
                i += 2;
                continue;
            }
            const auto end = body.find('}', i + 1);
            if (end == std::string::npos)
                throw Error("unterminated placeholder at offset " + std::to_string(i));
            if (!literal.empty()) {
                tokens.push_back({false, literal});
                literal.clear();
            }
            tokens.push_back({true, body.substr(i + 1, end - i - 1)});
            i = end + 1;
        } else if (c == '}') {
            if (i + 1 < body.size() && body[i + 1] == '}') {
                literal.push_back('}');
                i += 2;
                continue;
            }
            throw Error("unescaped '}' at offset " + std::to_string(i) +
                        " (write '}}' for a literal brace)");
        } else {
            literal.push_back(c);
            ++i;
        }
    }
    if (!literal.empty()) tokens.push_back({false, literal});
    return tokens;
}

void validate_placeholders(const std::string& body, const std::string& origin) {
    for (const Token& t : tokenize(body)) {
        if (!t.is_placeholder) continue;
        if (std::find(kAllowedPlaceholders.begin(), kAllowedPlaceholders.end(), t.text) ==
            kAllowedPlaceholders.end())
            throw Error("template " + origin + ": unknown placeholder '{" + t.text + "}'");
    }
}

std::string format_segment(const ContextSegment& seg) {
    return "--- " + seg.label + " ---\n" + seg.content;
}

std::string assemble_artifacts(const std::vector<ContextSegment>& segments) {
    if (segments.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i) out += "\n\n";
        out += format_segment(segments[i]);
    }
    return out;
}

/// Keeps the newest segments that fit the budget, elides the rest.
std::string assemble_artifacts_capped(const std::vector<ContextSegment>& segments,
                                      std::size_t budget) {
    const std::string marker = kElisionMarker;
    if (budget <= marker.size()) return "";
    const std::size_t body_budget = budget - marker.size();

    std::vector<std::string> kept;  // newest first while building
    std::size_t used = 0;
    bool elided = false;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        std::string formatted = format_segment(*it);
        const std::size_t joiner = kept.empty() ? 0 : 2;
        if (used + joiner + formatted.size() <= body_budget) {
            used += joiner + formatted.size();
            kept.push_back(std::move(formatted));
            continue;
        }
        if (kept.empty() && body_budget > 0) {
            // even the newest segment overflows: keep its tail
            kept.push_back(formatted.substr(formatted.size() - body_budget));
        }
        elided = true;
        break;
    }
    std::string out;
    if (elided) out += marker;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
        if (it != kept.rbegin()) out += "\n\n";
        out += *it;
    }
    return out;
}

std::string render_with_artifacts(const std::vector<Token>& tokens, const Bindings& bindings,
                                  const std::string& artifacts_text) {
    std::string out;
    for (const Token& t : tokens) {
        if (!t.is_placeholder) {
            out += t.text;
        } else if (t.text == "prior_artifacts") {
            out += artifacts_text;
        } else {
            auto it = bindings.values.find(t.text);
            if (it == bindings.values.end()) throw MissingBinding(t.text);
            out += it->second;
        }
    }
    return out;
}

} // namespace

std::string render(const PromptTemplate& tpl, const Bindings& bindings,
                   std::size_t max_context_chars) {
    const std::vector<Token> tokens = tokenize(tpl.body);

    const bool has_artifacts_slot =
        std::any_of(tokens.begin(), tokens.end(),
                    [](const Token& t) { return t.is_placeholder && t.text == "prior_artifacts"; });
    if (!has_artifacts_slot) return render_with_artifacts(tokens, bindings, "");

    std::string full = render_with_artifacts(tokens, bindings,
                                             assemble_artifacts(bindings.prior_artifacts));
    if (full.size() <= max_context_chars) return full;

    const std::string base = render_with_artifacts(tokens, bindings, "");
    const std::size_t budget = base.size() < max_context_chars
                                   ? max_context_chars - base.size()
                                   : 0;
    return render_with_artifacts(tokens, bindings,
                                 assemble_artifacts_capped(bindings.prior_artifacts, budget));
}

TemplateLibrary TemplateLibrary::load_dir(const std::string& dir) {
    TemplateLibrary lib;
    for (const char* process_name : {"waterfall", "vmodel", "agile"}) {
        const fs::path process_dir = fs::path(dir) / process_name;
        if (!fs::is_directory(process_dir)) continue;
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(process_dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".txt")
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const fs::path& file : files) {
            const std::string stem = file.stem().string();
            const auto sep = stem.find('_');
            if (sep == std::string::npos)
                throw Error("template file '" + file.string() + "': expected {Role}_{Phase}.txt");
            PromptTemplate tpl;
            tpl.process = parse_process_model(process_name);
            tpl.role = parse_role_kind(stem.substr(0, sep));
            tpl.phase = parse_phase_kind(stem.substr(sep + 1));
            tpl.body = read_file(file.string());
            validate_placeholders(tpl.body, file.string());
            lib.templates_[std::string(process_name) + "/" + stem] = std::move(tpl);
        }
    }
    if (lib.templates_.empty()) throw Error("no templates found under '" + dir + "'");
    return lib;
}

const PromptTemplate& TemplateLibrary::get(ProcessModel process, RoleKind role,
                                           PhaseKind phase) const {
    const std::string key =
        to_string(process) + "/" + to_string(role) + "_" + to_string(phase);
    auto it = templates_.find(key);
    if (it == templates_.end()) throw Error("no template for " + key);
    return it->second;
}

bool TemplateLibrary::has(ProcessModel process, RoleKind role, PhaseKind phase) const {
    return templates_.count(to_string(process) + "/" + to_string(role) + "_" + to_string(phase)) >
           0;
}

} // namespace swproc
