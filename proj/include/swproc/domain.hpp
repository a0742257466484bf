#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swproc/errors.hpp"

namespace swproc {

/// The coordination scaffold governing one run.
enum class ProcessModel { Waterfall, VModel, Agile };

/// Agent roles. Which roles participate in a run depends on its ProcessModel:
/// SprintManager and Tester exist only under Agile; the three TestExecutor
/// roles appear under V-Model and in the Waterfall testing stages.
enum class RoleKind {
    ProjectManager,
    Designer,
    Developer,
    Tester,
    Deployer,
    SprintManager,
    UnitTestExecutor,
    IntegrationTestExecutor,
    AcceptanceTestExecutor,
};

enum class PhaseKind {
    Requirements,
    Design,
    Implementation,
    UnitTesting,
    IntegrationTesting,
    AcceptanceTesting,
    Testing,
    Deployment,
    SprintPlanning,
    SprintReview,
};

/// A lifecycle stage. `sprint` is set when the stage belongs to an Agile
/// sprint; pre-sprint work (the backlog) and all Waterfall/V-Model stages
/// leave it unset.
struct Phase {
    PhaseKind kind;
    std::optional<int> sprint;

    bool operator==(const Phase&) const = default;
};

class UnknownProcessModel : public Error {
public:
    explicit UnknownProcessModel(const std::string& name)
        : Error("unknown process model: '" + name + "'") {}
};

/// Case-insensitive parse; accepts "waterfall", "vmodel", "v-model", "agile".
ProcessModel parse_process_model(const std::string& name);

/// Canonical lowercase name ("waterfall", "vmodel", "agile").
std::string to_string(ProcessModel p);
std::string to_string(RoleKind r);
std::string to_string(PhaseKind k);

RoleKind parse_role_kind(const std::string& name);
PhaseKind parse_phase_kind(const std::string& name);

/// Roles in canonical activation order for a process.
std::vector<RoleKind> roles_for(ProcessModel process);

/// One project from the sample corpus. `target_language_label` is metadata
/// only; the engine never compiles or executes generated code.
struct ProjectSpec {
    std::string id;
    std::string title;
    std::string requirement_text;
    std::string target_language_label;
};

struct RunLimits {
    int max_sprints = 3;
    int max_repair_attempts = 1;
    std::size_t max_context_chars = 60000;
};

/// One experimental unit: Project x ProcessModel x model label.
struct RunConfig {
    ProjectSpec project;
    ProcessModel process = ProcessModel::Waterfall;
    std::string model_label;
    std::uint64_t seed = 0;
    RunLimits limits;
};

enum class RunStatus { Completed, Failed };

struct SizeMetrics {
    long files = 0;                          // S1, code files only
    long loc = 0;                            // S2, non-blank lines
    std::optional<double> tokens_per_loc;    // S3, absent when loc == 0
    long files_all = 0;                      // informational: documents included
};

struct CostMetrics {
    long total_tokens = 0;   // C1
    double wall_time_s = 0;  // C2, sum of completion latencies
};

struct QualityMetrics {
    long code_smells = 0;                     // Q1, ingested
    long vulnerabilities = 0;                 // Q2, ingested
    double ai_bug_rate = 0.0;                 // Q3, failed/total over agent test reports
    std::optional<double> human_bug_rate;     // Q4, ingested
};

/// Full outcome of one experimental unit.
struct RunRecord {
    RunConfig config;
    RunStatus status = RunStatus::Completed;
    std::string failure_reason;  // set when status == Failed
    SizeMetrics size;
    CostMetrics cost;
    QualityMetrics quality;
    std::string transcript_path;  // run-directory-relative
};

/// Stable identifier for a run: "{project}__{process}__{model}".
std::string run_id(const RunConfig& cfg);

/// Model labels may contain characters unfit for paths; this maps them to
/// [A-Za-z0-9._-].
std::string sanitize_label(const std::string& label);

} // namespace swproc
