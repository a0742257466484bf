#include "swproc/domain.hpp"

#include <algorithm>
#include <cctype>

namespace swproc {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

ProcessModel parse_process_model(const std::string& name) {
    const std::string n = lower(name);
    if (n == "waterfall") return ProcessModel::Waterfall;
    if (n == "vmodel" || n == "v-model") return ProcessModel::VModel;
    if (n == "agile") return ProcessModel::Agile;
    throw UnknownProcessModel(name);
}

std::string to_string(ProcessModel p) {
    switch (p) {
        case ProcessModel::Waterfall: return "waterfall";
        case ProcessModel::VModel: return "vmodel";
        case ProcessModel::Agile: return "agile";
    }
    return "?";
}

std::string to_string(RoleKind r) {
    switch (r) {
        case RoleKind::ProjectManager: return "ProjectManager";
        case RoleKind::Designer: return "Designer";
        case RoleKind::Developer: return "Developer";
        case RoleKind::Tester: return "Tester";
        case RoleKind::Deployer: return "Deployer";
        case RoleKind::SprintManager: return "SprintManager";
        case RoleKind::UnitTestExecutor: return "UnitTestExecutor";
        case RoleKind::IntegrationTestExecutor: return "IntegrationTestExecutor";
        case RoleKind::AcceptanceTestExecutor: return "AcceptanceTestExecutor";
    }
    return "?";
}

std::string to_string(PhaseKind k) {
    switch (k) {
        case PhaseKind::Requirements: return "Requirements";
        case PhaseKind::Design: return "Design";
        case PhaseKind::Implementation: return "Implementation";
        case PhaseKind::UnitTesting: return "UnitTesting";
        case PhaseKind::IntegrationTesting: return "IntegrationTesting";
        case PhaseKind::AcceptanceTesting: return "AcceptanceTesting";
        case PhaseKind::Testing: return "Testing";
        case PhaseKind::Deployment: return "Deployment";
        case PhaseKind::SprintPlanning: return "SprintPlanning";
        case PhaseKind::SprintReview: return "SprintReview";
    }
    return "?";
}

RoleKind parse_role_kind(const std::string& name) {
    static const std::pair<const char*, RoleKind> table[] = {
        {"ProjectManager", RoleKind::ProjectManager},
        {"Designer", RoleKind::Designer},
        {"Developer", RoleKind::Developer},
        {"Tester", RoleKind::Tester},
        {"Deployer", RoleKind::Deployer},
        {"SprintManager", RoleKind::SprintManager},
        {"UnitTestExecutor", RoleKind::UnitTestExecutor},
        {"IntegrationTestExecutor", RoleKind::IntegrationTestExecutor},
        {"AcceptanceTestExecutor", RoleKind::AcceptanceTestExecutor},
    };
    for (const auto& [n, r] : table)
        if (name == n) return r;
    throw Error("unknown role kind: '" + name + "'");
}

PhaseKind parse_phase_kind(const std::string& name) {
    static const std::pair<const char*, PhaseKind> table[] = {
        {"Requirements", PhaseKind::Requirements},
        {"Design", PhaseKind::Design},
        {"Implementation", PhaseKind::Implementation},
        {"UnitTesting", PhaseKind::UnitTesting},
        {"IntegrationTesting", PhaseKind::IntegrationTesting},
        {"AcceptanceTesting", PhaseKind::AcceptanceTesting},
        {"Testing", PhaseKind::Testing},
        {"Deployment", PhaseKind::Deployment},
        {"SprintPlanning", PhaseKind::SprintPlanning},
        {"SprintReview", PhaseKind::SprintReview},
    };
    for (const auto& [n, p] : table)
        if (name == n) return p;
    throw Error("unknown phase kind: '" + name + "'");
}

std::vector<RoleKind> roles_for(ProcessModel process) {
    switch (process) {
        case ProcessModel::Waterfall:
            return {RoleKind::ProjectManager, RoleKind::Designer, RoleKind::Developer,
                    RoleKind::UnitTestExecutor, RoleKind::IntegrationTestExecutor,
                    RoleKind::AcceptanceTestExecutor, RoleKind::Deployer};
        case ProcessModel::Agile:
            return {RoleKind::ProjectManager, RoleKind::SprintManager, RoleKind::Designer,
                    RoleKind::Developer, RoleKind::Tester, RoleKind::Deployer};
        case ProcessModel::VModel:
            return {RoleKind::ProjectManager, RoleKind::Designer, RoleKind::Developer,
                    RoleKind::UnitTestExecutor, RoleKind::IntegrationTestExecutor,
                    RoleKind::AcceptanceTestExecutor};
    }
    return {};
}

std::string sanitize_label(const std::string& label) {
    std::string out;
    out.reserve(label.size());
    for (char c : label) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
        out.push_back(ok ? c : '-');
    }
    if (out.empty()) out = "model";
    return out;
}

std::string run_id(const RunConfig& cfg) {
    return cfg.project.id + "__" + to_string(cfg.process) + "__" + sanitize_label(cfg.model_label);
}

} // namespace swproc
