#include "swproc/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace swproc {

namespace fs = std::filesystem;

Json to_json(const Phase& phase) {
    Json j;
    j["kind"] = to_string(phase.kind);
    if (phase.sprint) j["sprint"] = *phase.sprint;
    return j;
}

Phase phase_from_json(const Json& j) {
    Phase p;
    p.kind = parse_phase_kind(j.at("kind").get<std::string>());
    if (j.contains("sprint")) p.sprint = j.at("sprint").get<int>();
    return p;
}

Json to_json(const ProjectSpec& p) {
    return Json{{"id", p.id},
                {"title", p.title},
                {"requirement_text", p.requirement_text},
                {"target_language_label", p.target_language_label}};
}

ProjectSpec project_from_json(const Json& j) {
    ProjectSpec p;
    p.id = j.at("id").get<std::string>();
    p.title = j.at("title").get<std::string>();
    p.requirement_text = j.at("requirement_text").get<std::string>();
    p.target_language_label = j.value("target_language_label", "");
    if (p.requirement_text.empty()) throw Error("project '" + p.id + "': requirement_text is empty");
    if (p.id.empty()) throw Error("project spec missing id");
    return p;
}

Json to_json(const RunConfig& cfg) {
    return Json{{"project", to_json(cfg.project)},
                {"process", to_string(cfg.process)},
                {"model_label", cfg.model_label},
                {"seed", cfg.seed},
                {"limits",
                 Json{{"max_sprints", cfg.limits.max_sprints},
                      {"max_repair_attempts", cfg.limits.max_repair_attempts},
                      {"max_context_chars", cfg.limits.max_context_chars}}}};
}

RunConfig run_config_from_json(const Json& j) {
    RunConfig cfg;
    cfg.project = project_from_json(j.at("project"));
    cfg.process = parse_process_model(j.at("process").get<std::string>());
    cfg.model_label = j.at("model_label").get<std::string>();
    cfg.seed = j.value("seed", std::uint64_t{0});
    const Json& lim = j.at("limits");
    cfg.limits.max_sprints = lim.at("max_sprints").get<int>();
    cfg.limits.max_repair_attempts = lim.at("max_repair_attempts").get<int>();
    cfg.limits.max_context_chars = lim.at("max_context_chars").get<std::size_t>();
    return cfg;
}

Json to_json(const RunRecord& rec) {
    Json size{{"files", rec.size.files},
              {"loc", rec.size.loc},
              {"files_all", rec.size.files_all}};
    if (rec.size.tokens_per_loc)
        size["tokens_per_loc"] = *rec.size.tokens_per_loc;
    else
        size["tokens_per_loc"] = nullptr;

    Json quality{{"code_smells", rec.quality.code_smells},
                 {"vulnerabilities", rec.quality.vulnerabilities},
                 {"ai_bug_rate", rec.quality.ai_bug_rate}};
    if (rec.quality.human_bug_rate)
        quality["human_bug_rate"] = *rec.quality.human_bug_rate;
    else
        quality["human_bug_rate"] = nullptr;

    Json j{{"run_id", run_id(rec.config)},
           {"config", to_json(rec.config)},
           {"status", rec.status == RunStatus::Completed ? "Completed" : "Failed"},
           {"size", size},
           {"cost", Json{{"total_tokens", rec.cost.total_tokens},
                         {"wall_time_s", rec.cost.wall_time_s}}},
           {"quality", quality},
           {"transcript_path", rec.transcript_path}};
    if (rec.status == RunStatus::Failed) j["failure_reason"] = rec.failure_reason;
    return j;
}

RunRecord run_record_from_json(const Json& j) {
    RunRecord rec;
    rec.config = run_config_from_json(j.at("config"));
    rec.status = j.at("status").get<std::string>() == "Completed" ? RunStatus::Completed
                                                                  : RunStatus::Failed;
    rec.failure_reason = j.value("failure_reason", "");
    const Json& size = j.at("size");
    rec.size.files = size.at("files").get<long>();
    rec.size.loc = size.at("loc").get<long>();
    rec.size.files_all = size.value("files_all", 0L);
    if (size.contains("tokens_per_loc") && !size.at("tokens_per_loc").is_null())
        rec.size.tokens_per_loc = size.at("tokens_per_loc").get<double>();
    const Json& cost = j.at("cost");
    rec.cost.total_tokens = cost.at("total_tokens").get<long>();
    rec.cost.wall_time_s = cost.at("wall_time_s").get<double>();
    const Json& q = j.at("quality");
    rec.quality.code_smells = q.at("code_smells").get<long>();
    rec.quality.vulnerabilities = q.at("vulnerabilities").get<long>();
    rec.quality.ai_bug_rate = q.at("ai_bug_rate").get<double>();
    if (q.contains("human_bug_rate") && !q.at("human_bug_rate").is_null())
        rec.quality.human_bug_rate = q.at("human_bug_rate").get<double>();
    rec.transcript_path = j.value("transcript_path", "");
    return rec;
}

Json to_json(const Message& msg) {
    Json refs = Json::array();
    for (const auto& r : msg.artifact_refs) refs.push_back(r);
    Json to = Json::array();
    for (RoleKind r : msg.send_to) to.push_back(to_string(r));
    return Json{{"id", msg.id},
                {"sender", to_string(msg.sender)},
                {"phase", to_json(msg.phase)},
                {"kind", to_string(msg.kind)},
                {"content", msg.content},
                {"artifact_refs", refs},
                {"send_to", to}};
}

Message message_from_json(const Json& j) {
    Message msg;
    msg.id = j.at("id").get<std::uint64_t>();
    msg.sender = parse_role_kind(j.at("sender").get<std::string>());
    msg.phase = phase_from_json(j.at("phase"));
    msg.kind = parse_message_kind(j.at("kind").get<std::string>());
    msg.content = j.at("content").get<std::string>();
    for (const auto& r : j.at("artifact_refs")) msg.artifact_refs.push_back(r.get<std::string>());
    for (const auto& r : j.at("send_to")) msg.send_to.insert(parse_role_kind(r.get<std::string>()));
    return msg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open '" + path + "' for reading");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return content;
}

void write_file(const std::string& path, const std::string& content) {
    const fs::path target(path);
    std::error_code ec;
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path(), ec);
        if (ec) throw IoFailure("cannot create directory '" + target.parent_path().string() + "'");
    }
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw IoFailure("short write to '" + tmp.string() + "'");
    }
    fs::rename(tmp, target, ec);
    if (ec) throw IoFailure("cannot rename '" + tmp.string() + "' to '" + path + "'");
}

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw Error("malformed JSON in '" + path + "': " + e.what());
    }
}

} // namespace swproc
