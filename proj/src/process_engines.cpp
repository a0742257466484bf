#include "swproc/process_engines.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "swproc/json_io.hpp"

namespace swproc {

namespace {

constexpr const char* kRepairSuffix =
    "\n\nYour previous reply could not be parsed: ";
constexpr const char* kRepairTail =
    "\nReturn a corrected reply in the required format.";

bool is_structured_kind(MessageKind k) {
    return k == MessageKind::RequirementDoc || k == MessageKind::DesignDoc ||
           k == MessageKind::TestPlan || k == MessageKind::SprintPlan;
}

Json report_to_json(const TestReport& report) {
    Json cases = Json::array();
    for (const TestCaseResult& c : report.cases)
        cases.push_back(Json{{"name", c.name}, {"verdict", c.passed ? "Pass" : "Fail"}});
    return Json{{"test_cases", cases}};
}

bool has_artifact(const Workspace& ws, const std::string& path) {
    const auto latest = ws.latest();
    return std::any_of(latest.begin(), latest.end(),
                       [&](const Artifact& a) { return a.path == path; });
}

/// Current code files as prompt context, oldest label order = path order.
std::vector<ContextSegment> code_segments(const Workspace& ws) {
    std::vector<ContextSegment> segments;
    for (const Artifact& a : ws.latest()) {
        if (a.kind != MessageKind::CodeBundle) continue;
        segments.push_back({a.path, a.content});
    }
    return segments;
}

struct StepOutcome {
    std::string reply;
    Json doc;
    CodeBundle bundle;
    TestReport report;
    Message message;
};

StepOutcome invoke_agent(RunSession& s, RoleKind actor, const Phase& phase,
                         MessageKind produces, const Bindings& bindings,
                         std::set<RoleKind> send_to, const std::string& doc_path,
                         std::vector<std::string> extra_refs = {}) {
    const PromptTemplate& tpl = s.templates->get(s.config.process, actor, phase.kind);
    const std::string system_prompt = persona(actor);
    const std::string base_prompt = render(tpl, bindings, s.config.limits.max_context_chars);

    StepOutcome out;
    std::string user_prompt;
    std::string last_error;
    const int attempts = 1 + std::max(0, s.config.limits.max_repair_attempts);
    bool parsed = false;
    for (int attempt = 1; attempt <= attempts && !parsed; ++attempt) {
        user_prompt = attempt == 1
                          ? base_prompt
                          : base_prompt + kRepairSuffix + last_error + kRepairTail;
        CompletionRequest req;
        req.model_label = s.config.model_label;
        req.system_prompt = system_prompt;
        req.user_prompt = user_prompt;

        CompletionKey key{s.config.project.id, s.config.process, actor, phase, attempt};
        CompletionResponse resp;
        try {
            resp = s.backend->complete(req, key);
        } catch (const Error& e) {
            throw RunFailed(phase, e.what());
        }
        s.ledger.record(actor, phase, resp);

        try {
            if (is_structured_kind(produces)) {
                out.doc = parse_structured_doc(resp.text);
            } else if (produces == MessageKind::CodeBundle) {
                out.bundle = parse_code_bundle(resp.text);
            } else if (produces == MessageKind::TestReport) {
                out.report = parse_test_report(resp.text);
            }
            out.reply = resp.text;
            parsed = true;
        } catch (const Error& e) {
            last_error = e.what();
            if (attempt == attempts) throw RunFailed(phase, last_error);
        }
    }

    std::vector<std::string> refs;
    if (produces == MessageKind::CodeBundle) {
        for (const Artifact& a : s.workspace.write_bundle(out.bundle)) refs.push_back(a.path);
    } else if (produces == MessageKind::TestReport) {
        s.workspace.write_doc(doc_path, report_to_json(out.report), produces);
        refs.push_back(doc_path);
        s.test_cases_total += static_cast<long>(out.report.cases.size());
        s.test_cases_failed += static_cast<long>(out.report.failed());
    } else if (is_structured_kind(produces)) {
        s.workspace.write_doc(doc_path, out.doc, produces);
        refs.push_back(doc_path);
    } else {
        s.workspace.write_text(doc_path, out.reply, produces);
        refs.push_back(doc_path);
    }
    for (std::string& ref : extra_refs) refs.push_back(std::move(ref));

    MessageDraft draft;
    draft.sender = actor;
    draft.phase = phase;
    draft.kind = produces;
    draft.content = out.reply;
    draft.artifact_refs = refs;
    draft.send_to = std::move(send_to);
    out.message = s.pool.publish(std::move(draft));
    s.prompts[out.message.id] = {system_prompt, user_prompt};
    return out;
}

void begin_phase(RunSession& s, const Phase& phase) {
    s.state.current_phase = phase;
    s.state.sprint_index = phase.sprint;
}

void end_phase(RunSession& s) {
    s.state.completed_phases.push_back(s.state.current_phase);
}

Bindings project_bindings(const RunSession& s) {
    Bindings b;
    b.values["project_name"] = s.config.project.title;
    b.values["requirements"] = s.config.project.requirement_text;
    b.values["target_language"] = s.config.project.target_language_label;
    return b;
}

struct BacklogItem {
    std::string priority;
    std::string text;
    bool done = false;
};

std::vector<BacklogItem> parse_backlog(const Json& prd) {
    const Json* pool = nullptr;
    for (const auto& [key, value] : prd.items()) {
        std::string lowered = key;
        std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (lowered == "requirement pool" || lowered == "requirement_pool") {
            pool = &value;
            break;
        }
    }
    std::vector<BacklogItem> backlog;
    if (pool == nullptr || !pool->is_array()) return backlog;
    for (const Json& entry : *pool) {
        BacklogItem item;
        if (entry.is_array() && entry.size() >= 2 && entry[0].is_string() &&
            entry[1].is_string()) {
            item.priority = entry[0].get<std::string>();
            item.text = entry[1].get<std::string>();
        } else if (entry.is_object()) {
            item.priority = entry.value("priority", "P2");
            for (const char* field : {"requirement", "text", "description"}) {
                if (entry.contains(field) && entry[field].is_string()) {
                    item.text = entry[field].get<std::string>();
                    break;
                }
            }
        }
        if (!item.text.empty()) backlog.push_back(std::move(item));
    }
    return backlog;
}

std::string sprint_context_text(int sprint, int max_sprints,
                                const std::vector<const BacklogItem*>& scope,
                                const std::vector<std::string>& carried_failures) {
    std::string ctx = "Sprint " + std::to_string(sprint) + " of " +
                      std::to_string(max_sprints) + ".\nBacklog items in scope:\n";
    if (scope.empty()) {
        ctx += "- (none)\n";
    } else {
        for (const BacklogItem* item : scope)
            ctx += "- [" + item->priority + "] " + item->text + "\n";
    }
    ctx += "Carried-over failing cases from the previous sprint:\n";
    if (carried_failures.empty()) {
        ctx += "- (none)\n";
    } else {
        for (const std::string& name : carried_failures) ctx += "- " + name + "\n";
    }
    return ctx;
}

} // namespace

std::string RunFailed::phase_label(const Phase& p) {
    std::string label = to_string(p.kind);
    if (p.sprint) label += " (sprint " + std::to_string(*p.sprint) + ")";
    return label;
}

std::string TickClock::next_iso() {
    const std::int64_t s = ticks_++;
    char buf[32];
    std::snprintf(buf, sizeof buf, "2025-01-01T%02d:%02d:%02dZ",
                  static_cast<int>(s / 3600), static_cast<int>((s / 60) % 60),
                  static_cast<int>(s % 60));
    return buf;
}

PhaseKind vmodel_validation_pair(PhaseKind phase) {
    switch (phase) {
        case PhaseKind::Requirements: return PhaseKind::AcceptanceTesting;
        case PhaseKind::Design: return PhaseKind::IntegrationTesting;
        case PhaseKind::Implementation: return PhaseKind::UnitTesting;
        case PhaseKind::AcceptanceTesting: return PhaseKind::Requirements;
        case PhaseKind::IntegrationTesting: return PhaseKind::Design;
        case PhaseKind::UnitTesting: return PhaseKind::Implementation;
        default:
            throw Error("phase " + to_string(phase) + " has no V-Model validation pair");
    }
}

std::string persona(RoleKind role) {
    switch (role) {
        case RoleKind::ProjectManager:
            return "You are the Project Manager of a software team. You turn customer "
                   "requirements into precise, complete product documents.";
        case RoleKind::Designer:
            return "You are the Software Designer. You produce complete, implementable "
                   "system designs.";
        case RoleKind::Developer:
            return "You are the Developer. You write complete, working code for every "
                   "file in the design and own the handoff of shared artifacts.";
        case RoleKind::Tester:
            return "You are the Tester. You validate the implementation and report "
                   "precise per-case verdicts.";
        case RoleKind::Deployer:
            return "You are the Deployer. You prepare and document the release of the "
                   "finished system.";
        case RoleKind::SprintManager:
            return "You are the Sprint Manager. You plan sprints, assemble sprint "
                   "context, and track sprint outcomes.";
        case RoleKind::UnitTestExecutor:
            return "You are the Unit Test Executor. You plan and execute unit-level "
                   "tests.";
        case RoleKind::IntegrationTestExecutor:
            return "You are the Integration Test Executor. You plan and execute "
                   "integration-level tests.";
        case RoleKind::AcceptanceTestExecutor:
            return "You are the Acceptance Test Executor. You plan and execute "
                   "acceptance-level tests against the requirements.";
    }
    throw Error("unknown role");
}

RunSession::RunSession(RunConfig cfg, CompletionBackend& b, const TemplateLibrary& t,
                       std::string dir)
    : config(std::move(cfg)),
      backend(&b),
      templates(&t),
      run_dir(std::move(dir)),
      workspace(run_dir) {
    state.process = config.process;
}

void run_waterfall(RunSession& s) {
    using RK = RoleKind;
    Bindings base = project_bindings(s);

    begin_phase(s, {PhaseKind::Requirements, std::nullopt});
    auto prd = invoke_agent(s, RK::ProjectManager, s.state.current_phase,
                            MessageKind::RequirementDoc, base,
                            {RK::Designer, RK::Developer}, "docs/prd.json");
    end_phase(s);
    const std::string prd_text = prd.doc.dump(2);

    begin_phase(s, {PhaseKind::Design, std::nullopt});
    Bindings design_in = base;
    design_in.values["prd"] = prd_text;
    auto design = invoke_agent(s, RK::Designer, s.state.current_phase, MessageKind::DesignDoc,
                               design_in, {RK::Developer}, "docs/design.json");
    end_phase(s);
    const std::string design_text = design.doc.dump(2);

    begin_phase(s, {PhaseKind::Implementation, std::nullopt});
    Bindings impl_in = base;
    impl_in.values["detailed_design"] = design_text;
    invoke_agent(s, RK::Developer, s.state.current_phase, MessageKind::CodeBundle, impl_in,
                 {RK::UnitTestExecutor, RK::IntegrationTestExecutor, RK::AcceptanceTestExecutor,
                  RK::Deployer, RK::Developer},
                 "");
    end_phase(s);

    const struct {
        PhaseKind phase;
        RoleKind actor;
        const char* report_path;
        bool wants_prd;
    } test_stages[] = {
        {PhaseKind::UnitTesting, RK::UnitTestExecutor, "docs/test_report_unit.json", false},
        {PhaseKind::IntegrationTesting, RK::IntegrationTestExecutor,
         "docs/test_report_integration.json", false},
        {PhaseKind::AcceptanceTesting, RK::AcceptanceTestExecutor,
         "docs/test_report_acceptance.json", true},
    };
    for (const auto& stage : test_stages) {
        begin_phase(s, {stage.phase, std::nullopt});
        Bindings test_in = base;
        if (stage.wants_prd) test_in.values["prd"] = prd_text;
        test_in.prior_artifacts = code_segments(s.workspace);
        invoke_agent(s, stage.actor, s.state.current_phase, MessageKind::TestReport, test_in,
                     {RK::Developer, RK::Deployer}, stage.report_path);
        end_phase(s);
    }

    begin_phase(s, {PhaseKind::Deployment, std::nullopt});
    Bindings deploy_in = base;
    deploy_in.prior_artifacts = code_segments(s.workspace);
    invoke_agent(s, RK::Deployer, s.state.current_phase, MessageKind::DeploymentNote,
                 deploy_in, {}, "docs/deployment.md");
    end_phase(s);
}

void run_vmodel(RunSession& s) {
    using RK = RoleKind;
    Bindings base = project_bindings(s);

    // Descending leg: each development stage also drafts the plan for its
    // paired validation stage. A failed plan draft is tolerated here; the
    // gap surfaces as MissingPlan when the paired execution stage starts.
    begin_phase(s, {PhaseKind::Requirements, std::nullopt});
    auto prd = invoke_agent(s, RK::ProjectManager, s.state.current_phase,
                            MessageKind::RequirementDoc, base,
                            {RK::Designer, RK::AcceptanceTestExecutor, RK::Developer},
                            "docs/prd.json");
    const std::string prd_text = prd.doc.dump(2);
    Bindings acc_plan_in = base;
    acc_plan_in.values["prd"] = prd_text;
    try {
        invoke_agent(s, RK::AcceptanceTestExecutor, s.state.current_phase,
                     MessageKind::TestPlan, acc_plan_in,
                     {RK::AcceptanceTestExecutor, RK::Developer},
                     "docs/test_plan_acceptance.json");
    } catch (const Error&) {
        // tolerated: plan absent
    }
    end_phase(s);

    begin_phase(s, {PhaseKind::Design, std::nullopt});
    Bindings design_in = base;
    design_in.values["prd"] = prd_text;
    auto design = invoke_agent(s, RK::Designer, s.state.current_phase, MessageKind::DesignDoc,
                               design_in, {RK::Developer, RK::IntegrationTestExecutor},
                               "docs/design.json");
    const std::string design_text = design.doc.dump(2);
    Bindings int_plan_in = design_in;
    int_plan_in.values["detailed_design"] = design_text;
    try {
        invoke_agent(s, RK::IntegrationTestExecutor, s.state.current_phase,
                     MessageKind::TestPlan, int_plan_in,
                     {RK::IntegrationTestExecutor, RK::Developer},
                     "docs/test_plan_integration.json");
    } catch (const Error&) {
    }
    end_phase(s);

    begin_phase(s, {PhaseKind::Implementation, std::nullopt});
    Bindings impl_in = base;
    impl_in.values["detailed_design"] = design_text;
    invoke_agent(s, RK::Developer, s.state.current_phase, MessageKind::CodeBundle, impl_in,
                 {RK::UnitTestExecutor, RK::IntegrationTestExecutor, RK::AcceptanceTestExecutor,
                  RK::Developer},
                 "");
    Bindings unit_plan_in = impl_in;
    unit_plan_in.prior_artifacts = code_segments(s.workspace);
    try {
        invoke_agent(s, RK::UnitTestExecutor, s.state.current_phase, MessageKind::TestPlan,
                     unit_plan_in, {RK::UnitTestExecutor, RK::Developer},
                     "docs/test_plan_unit.json");
    } catch (const Error&) {
    }
    end_phase(s);

    // Ascending leg: execute the three plans in reverse pairing order.
    const struct {
        PhaseKind phase;
        RoleKind actor;
        const char* plan_path;
        const char* report_path;
        bool wants_prd;
    } executions[] = {
        {PhaseKind::UnitTesting, RK::UnitTestExecutor, "docs/test_plan_unit.json",
         "docs/test_report_unit.json", false},
        {PhaseKind::IntegrationTesting, RK::IntegrationTestExecutor,
         "docs/test_plan_integration.json", "docs/test_report_integration.json", false},
        {PhaseKind::AcceptanceTesting, RK::AcceptanceTestExecutor,
         "docs/test_plan_acceptance.json", "docs/test_report_acceptance.json", true},
    };
    for (const auto& exec : executions) {
        begin_phase(s, {exec.phase, std::nullopt});
        if (!has_artifact(s.workspace, exec.plan_path)) throw MissingPlan(exec.phase);
        Bindings exec_in = base;
        if (exec.wants_prd) exec_in.values["prd"] = prd_text;
        exec_in.prior_artifacts.push_back(
            {exec.plan_path, read_file(s.workspace.workspace_dir() + "/" + exec.plan_path)});
        for (ContextSegment& seg : code_segments(s.workspace))
            exec_in.prior_artifacts.push_back(std::move(seg));
        invoke_agent(s, exec.actor, s.state.current_phase, MessageKind::TestReport, exec_in,
                     {RK::Developer}, exec.report_path, {exec.plan_path});
        end_phase(s);
    }
}

void run_agile(RunSession& s) {
    using RK = RoleKind;
    Bindings base = project_bindings(s);
    const int max_sprints = std::max(1, s.config.limits.max_sprints);

    begin_phase(s, {PhaseKind::Requirements, std::nullopt});
    auto prd = invoke_agent(s, RK::ProjectManager, s.state.current_phase,
                            MessageKind::RequirementDoc, base,
                            {RK::SprintManager, RK::Designer, RK::Developer}, "docs/prd.json");
    end_phase(s);
    const std::string prd_text = prd.doc.dump(2);

    std::vector<BacklogItem> backlog = parse_backlog(prd.doc);
    std::vector<std::string> carried_failures;

    for (int sprint = 1; sprint <= max_sprints; ++sprint) {
        const std::string sprint_dir = "docs/sprint_" + std::to_string(sprint);

        std::vector<const BacklogItem*> scope;
        std::string top_priority;
        for (const BacklogItem& item : backlog) {
            if (item.done) continue;
            if (top_priority.empty() || item.priority < top_priority)
                top_priority = item.priority;
        }
        for (BacklogItem& item : backlog) {
            if (!item.done && item.priority == top_priority) {
                scope.push_back(&item);
                item.done = true;
            }
        }
        const std::string sprint_context =
            sprint_context_text(sprint, max_sprints, scope, carried_failures);

        begin_phase(s, {PhaseKind::SprintPlanning, sprint});
        Bindings plan_in = base;
        plan_in.values["prd"] = prd_text;
        plan_in.values["sprint_context"] = sprint_context;
        invoke_agent(s, RK::SprintManager, s.state.current_phase, MessageKind::SprintPlan,
                     plan_in, {RK::Designer, RK::Developer, RK::Tester, RK::Deployer},
                     sprint_dir + "/sprint_plan.json");
        end_phase(s);

        begin_phase(s, {PhaseKind::Design, sprint});
        Bindings design_in = base;
        design_in.values["prd"] = prd_text;
        design_in.values["sprint_context"] = sprint_context;
        auto design =
            invoke_agent(s, RK::Designer, s.state.current_phase, MessageKind::DesignDoc,
                         design_in, {RK::Developer}, sprint_dir + "/design.json");
        end_phase(s);

        begin_phase(s, {PhaseKind::Implementation, sprint});
        Bindings impl_in = base;
        impl_in.values["detailed_design"] = design.doc.dump(2);
        impl_in.values["sprint_context"] = sprint_context;
        impl_in.prior_artifacts = code_segments(s.workspace);
        invoke_agent(s, RK::Developer, s.state.current_phase, MessageKind::CodeBundle, impl_in,
                     {RK::Tester, RK::Deployer, RK::Developer}, "");
        end_phase(s);

        begin_phase(s, {PhaseKind::Testing, sprint});
        Bindings test_in = base;
        test_in.values["sprint_context"] = sprint_context;
        test_in.prior_artifacts = code_segments(s.workspace);
        auto tested = invoke_agent(s, RK::Tester, s.state.current_phase,
                                   MessageKind::TestReport, test_in,
                                   {RK::Developer, RK::Deployer, RK::SprintManager},
                                   sprint_dir + "/test_report.json");
        end_phase(s);

        begin_phase(s, {PhaseKind::Deployment, sprint});
        Bindings deploy_in = base;
        deploy_in.values["sprint_context"] = sprint_context;
        invoke_agent(s, RK::Deployer, s.state.current_phase, MessageKind::DeploymentNote,
                     deploy_in, {}, sprint_dir + "/deployment.md");
        end_phase(s);

        const long backlog_remaining = static_cast<long>(
            std::count_if(backlog.begin(), backlog.end(),
                          [](const BacklogItem& i) { return !i.done; }));

        begin_phase(s, {PhaseKind::SprintReview, sprint});
        carried_failures = tested.report.failed_names();
        Json retro{{"sprint", sprint},
                   {"cases_total", tested.report.cases.size()},
                   {"cases_failed", tested.report.failed()},
                   {"failed_cases", carried_failures},
                   {"backlog_remaining", backlog_remaining}};
        MessageDraft draft;
        draft.sender = RK::SprintManager;
        draft.phase = s.state.current_phase;
        draft.kind = MessageKind::SprintRetro;
        draft.content = retro.dump();
        s.pool.publish(std::move(draft));
        end_phase(s);

        s.workspace.snapshot(sprint, s.clock.next_iso());

        if (carried_failures.empty() && backlog_remaining == 0) {
            s.state.halted = true;
            s.state.halt_reason = "all tests passing and backlog exhausted after sprint " +
                                  std::to_string(sprint);
            break;
        }
    }
}

std::string transcript_line(
    const Message& msg,
    const std::map<std::uint64_t, std::pair<std::string, std::string>>& prompts) {
    Json j = to_json(msg);
    const auto it = prompts.find(msg.id);
    if (it != prompts.end())
        j["prompt"] = Json{{"system", it->second.first}, {"user", it->second.second}};
    return j.dump() + "\n";
}

RunRecord run(const RunConfig& config, CompletionBackend& backend,
              const TemplateLibrary& templates, const std::string& run_dir) {
    RunSession session(config, backend, templates, run_dir);
    RunRecord rec;
    rec.config = config;

    try {
        switch (config.process) {
            case ProcessModel::Waterfall: run_waterfall(session); break;
            case ProcessModel::VModel: run_vmodel(session); break;
            case ProcessModel::Agile: run_agile(session); break;
        }
        rec.status = RunStatus::Completed;
    } catch (const std::exception& e) {
        rec.status = RunStatus::Failed;
        rec.failure_reason = e.what();
        session.state.halted = true;
        session.state.halt_reason = e.what();
    }
    session.pool.close();

    rec.size = session.workspace.measure_size();
    rec.cost.total_tokens = session.ledger.total_tokens();
    rec.cost.wall_time_s = session.ledger.total_latency_s();
    if (rec.size.loc > 0)
        rec.size.tokens_per_loc = static_cast<double>(rec.cost.total_tokens) /
                                  static_cast<double>(rec.size.loc);
    if (session.test_cases_total > 0)
        rec.quality.ai_bug_rate = static_cast<double>(session.test_cases_failed) /
                                  static_cast<double>(session.test_cases_total);
    rec.transcript_path = "transcript.jsonl";

    std::string jsonl;
    for (const Message& msg : session.pool.transcript())
        jsonl += transcript_line(msg, session.prompts);
    write_file(run_dir + "/transcript.jsonl", jsonl);
    write_file(run_dir + "/record.json", to_json(rec).dump(2) + "\n");
    return rec;
}

} // namespace swproc
