#pragma once

#include <map>
#include <string>
#include <vector>

#include "swproc/domain.hpp"
#include "swproc/errors.hpp"

namespace swproc {

class MissingBinding : public Error {
public:
    explicit MissingBinding(const std::string& name)
        : Error("missing binding for placeholder '" + name + "'") {}
};

/// One prompt template for a (process, role, phase) slot. Placeholders use
/// `{name}` syntax with `{{`/`}}` escapes for literal braces. The allowed
/// placeholder vocabulary is fixed (see kAllowedPlaceholders); loading a
/// template with an unknown placeholder is an error.
struct PromptTemplate {
    RoleKind role = RoleKind::ProjectManager;
    ProcessModel process = ProcessModel::Waterfall;
    PhaseKind phase = PhaseKind::Requirements;
    std::string body;
};

/// One accumulated artifact carried into a prompt, oldest first.
struct ContextSegment {
    std::string label;
    std::string content;
};

/// Values for template rendering. Scalar placeholders come from `values`;
/// the `prior_artifacts` placeholder is assembled from the segment list and
/// is the part sacrificed when the rendered text exceeds the context budget.
struct Bindings {
    std::map<std::string, std::string> values;
    std::vector<ContextSegment> prior_artifacts;
};

extern const std::vector<std::string> kAllowedPlaceholders;

/// Pure substitution of bound values into the template body. If the result
/// would exceed max_context_chars, prior_artifacts content is truncated
/// oldest-first with an elision marker until the output fits (the newest
/// segments survive). Throws MissingBinding for an unbound placeholder.
std::string render(const PromptTemplate& tpl, const Bindings& bindings,
                   std::size_t max_context_chars);

/// Loads templates from a directory laid out as
/// {dir}/{process}/{Role}_{Phase}.txt.
class TemplateLibrary {
public:
    static TemplateLibrary load_dir(const std::string& dir);

    const PromptTemplate& get(ProcessModel process, RoleKind role, PhaseKind phase) const;
    bool has(ProcessModel process, RoleKind role, PhaseKind phase) const;
    std::size_t size() const { return templates_.size(); }

private:
    std::map<std::string, PromptTemplate> templates_;  // keyed "{process}/{Role}_{Phase}"
};

} // namespace swproc
