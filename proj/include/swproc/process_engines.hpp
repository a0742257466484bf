#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swproc/domain.hpp"
#include "swproc/errors.hpp"
#include "swproc/llm_gateway.hpp"
#include "swproc/message_pool.hpp"
#include "swproc/output_parsers.hpp"
#include "swproc/prompt_templates.hpp"
#include "swproc/workspace.hpp"

namespace swproc {

class RunFailed : public Error {
public:
    RunFailed(const Phase& phase, const std::string& cause)
        : Error("run failed at " + phase_label(phase) + ": " + cause), phase(phase) {}
    Phase phase;

    static std::string phase_label(const Phase& p);
};

class MissingPlan : public Error {
public:
    explicit MissingPlan(PhaseKind execution_phase)
        : Error("execution phase " + to_string(execution_phase) +
                " started without its paired test plan"),
          phase(execution_phase) {}
    PhaseKind phase;
};

/// Deterministic timestamp source: a fixed epoch advanced one second per
/// call, so persisted artifacts never read the wall clock.
class TickClock {
public:
    std::string next_iso();

private:
    std::int64_t ticks_ = 0;
};

/// Where the schedule currently stands, for audit and tests.
struct EngineState {
    ProcessModel process = ProcessModel::Waterfall;
    Phase current_phase{PhaseKind::Requirements, std::nullopt};
    std::vector<Phase> completed_phases;
    std::optional<int> sprint_index;
    bool halted = false;
    std::string halt_reason;
};

/// One scheduled activation: which role acts in which phase, what it reads
/// and what it must produce. `validation_pair` links a V-Model test
/// execution phase back to the development phase whose plan it runs.
struct PhasePlan {
    Phase phase;
    RoleKind actor = RoleKind::ProjectManager;
    std::vector<MessageKind> consumes;
    MessageKind produces = MessageKind::RequirementDoc;
    std::optional<Phase> validation_pair;
};

/// The V-Model pairing: Requirements<->AcceptanceTesting,
/// Design<->IntegrationTesting, Implementation<->UnitTesting.
PhaseKind vmodel_validation_pair(PhaseKind dev_or_test_phase);

/// All per-run mutable state threaded through one engine execution.
struct RunSession {
    RunSession(RunConfig cfg, CompletionBackend& backend, const TemplateLibrary& templates,
               std::string run_dir);

    RunConfig config;
    CompletionBackend* backend;
    const TemplateLibrary* templates;
    std::string run_dir;

    MessagePool pool;
    Workspace workspace;
    TokenLedger ledger;
    TickClock clock;
    EngineState state;

    /// message id -> (system prompt, user prompt), for transcript audit.
    std::map<std::uint64_t, std::pair<std::string, std::string>> prompts;

    long test_cases_total = 0;   // Q3 denominator
    long test_cases_failed = 0;  // Q3 numerator
};

void run_waterfall(RunSession& session);
void run_vmodel(RunSession& session);
void run_agile(RunSession& session);

/// Executes one experimental unit end to end: dispatches to the engine for
/// config.process, then persists transcript.jsonl and record.json under
/// run_dir. Engine failures are captured in the record (status Failed,
/// partial metrics kept), not rethrown.
RunRecord run(const RunConfig& config, CompletionBackend& backend,
              const TemplateLibrary& templates, const std::string& run_dir);

/// The system prompt persona for a role.
std::string persona(RoleKind role);

/// Serializes one transcript line: the message plus, when recorded, the
/// prompts that produced it.
std::string transcript_line(const Message& msg,
                            const std::map<std::uint64_t,
                                           std::pair<std::string, std::string>>& prompts);

} // namespace swproc
