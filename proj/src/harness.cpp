#include "swproc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <thread>

#include "swproc/analytics.hpp"
#include "swproc/json_io.hpp"
#include "swproc/process_engines.hpp"

namespace swproc {

namespace fs = std::filesystem;

namespace {

std::string resolve(const fs::path& base_dir, const std::string& ref) {
    const fs::path p(ref);
    return p.is_absolute() ? p.string() : (base_dir / p).lexically_normal().string();
}

ProjectSpec load_project(const std::string& path) {
    try {
        return project_from_json(parse_json_file(path));
    } catch (const std::exception& e) {
        throw ConfigError("project file '" + path + "': " + e.what());
    }
}

} // namespace

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    Json j;
    try {
        j = parse_json_file(path);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    const fs::path base_dir = fs::path(path).parent_path();

    ExperimentConfig cfg;
    try {
        for (const Json& ref : j.at("projects"))
            cfg.projects.push_back(load_project(resolve(base_dir, ref.get<std::string>())));
        for (const Json& name : j.at("processes"))
            cfg.processes.push_back(parse_process_model(name.get<std::string>()));
        for (const Json& m : j.at("models")) {
            ModelSpec spec;
            spec.label = m.at("label").get<std::string>();
            if (m.contains("playback")) {
                spec.playback_file = resolve(base_dir, m.at("playback").get<std::string>());
            } else {
                spec.live.base_url = m.at("base_url").get<std::string>();
                spec.live.credential_env = m.at("credential_env").get<std::string>();
                spec.live.timeout_s = m.value("timeout_s", spec.live.timeout_s);
                spec.live.max_retries = m.value("max_retries", spec.live.max_retries);
            }
            cfg.models.push_back(std::move(spec));
        }
        if (j.contains("limits")) {
            const Json& lim = j.at("limits");
            cfg.limits.max_sprints = lim.value("max_sprints", cfg.limits.max_sprints);
            cfg.limits.max_repair_attempts =
                lim.value("max_repair_attempts", cfg.limits.max_repair_attempts);
            cfg.limits.max_context_chars =
                lim.value("max_context_chars", cfg.limits.max_context_chars);
        }
        cfg.seed = j.value("seed", std::uint64_t{0});
        cfg.parallelism = j.value("parallelism", 1);
        cfg.output_dir = resolve(base_dir, j.value("output_dir", "out"));
        cfg.templates_dir = resolve(base_dir, j.at("templates_dir").get<std::string>());
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }

    if (cfg.projects.empty()) throw ConfigError("no projects configured");
    if (cfg.processes.empty()) throw ConfigError("no processes configured");
    if (cfg.models.empty()) throw ConfigError("no models configured");
    if (cfg.parallelism < 1) throw ConfigError("parallelism must be >= 1");
    if (cfg.limits.max_sprints < 1) throw ConfigError("max_sprints must be >= 1");
    if (cfg.limits.max_repair_attempts < 0)
        throw ConfigError("max_repair_attempts must be >= 0");
    std::vector<std::string> labels;
    for (const ModelSpec& m : cfg.models) labels.push_back(m.label);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw ConfigError("duplicate model labels");
    for (const ModelSpec& m : cfg.models)
        if (!m.playback_file.empty() && !fs::exists(m.playback_file))
            throw ConfigError("playback file not found: " + m.playback_file);
    if (!fs::is_directory(cfg.templates_dir))
        throw ConfigError("templates_dir is not a directory: " + cfg.templates_dir);
    return cfg;
}

std::string run_dir_for(const std::string& runs_root, const RunConfig& cfg) {
    return runs_root + "/" + sanitize_label(cfg.project.id) + "/" +
           to_string(cfg.process) + "/" + sanitize_label(cfg.model_label);
}

std::vector<StoredRecord> load_stored_records(const std::string& runs_dir) {
    std::vector<StoredRecord> out;
    if (!fs::is_directory(runs_dir)) return out;
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(runs_dir)) {
        if (entry.is_regular_file() && entry.path().filename() == "record.json")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
        try {
            out.push_back({run_record_from_json(parse_json_file(file.string())),
                           file.string()});
        } catch (const std::exception& e) {
            throw MalformedFile(file.string(), e.what());
        }
    }
    return out;
}

int cmd_run(const std::string& config_path, const std::optional<std::string>& out_override,
            const std::optional<std::uint64_t>& seed_override) {
    ExperimentConfig cfg;
    TemplateLibrary templates;
    std::map<std::string, std::unique_ptr<CompletionBackend>> backends;
    try {
        cfg = ExperimentConfig::load(config_path);
        if (out_override) cfg.output_dir = *out_override;
        if (seed_override) cfg.seed = *seed_override;
        templates = TemplateLibrary::load_dir(cfg.templates_dir);
        for (const ModelSpec& m : cfg.models) {
            if (!m.playback_file.empty()) {
                backends[m.label] = std::make_unique<PlaybackBackend>(
                    PlaybackBackend::from_file(m.playback_file));
            } else {
                backends[m.label] = std::make_unique<LiveBackend>(m.live);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    std::vector<RunConfig> cells;
    for (const ProjectSpec& project : cfg.projects) {
        for (const ProcessModel process : cfg.processes) {
            for (const ModelSpec& model : cfg.models) {
                RunConfig cell;
                cell.project = project;
                cell.process = process;
                cell.model_label = model.label;
                cell.seed = cfg.seed;
                cell.limits = cfg.limits;
                cells.push_back(std::move(cell));
            }
        }
    }

    const std::string runs_root = cfg.output_dir + "/runs";
    std::vector<RunRecord> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const RunConfig& cell = cells[i];
            try {
                results[i] = run(cell, *backends.at(cell.model_label), templates,
                                 run_dir_for(runs_root, cell));
            } catch (const std::exception& e) {
                RunRecord rec;
                rec.config = cell;
                rec.status = RunStatus::Failed;
                rec.failure_reason = e.what();
                results[i] = std::move(rec);
            }
        }
    };
    const std::size_t n_workers =
        std::min<std::size_t>(static_cast<std::size_t>(cfg.parallelism), cells.size());
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < n_workers; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();

    std::size_t failed = 0;
    for (const RunRecord& rec : results) {
        if (rec.status == RunStatus::Completed) {
            std::cout << run_id(rec.config) << ": Completed\n";
        } else {
            ++failed;
            std::cout << run_id(rec.config) << ": Failed (" << rec.failure_reason << ")\n";
        }
    }
    std::cout << results.size() - failed << "/" << results.size() << " runs completed\n";
    return failed == 0 ? 0 : 2;
}

int cmd_ingest(const std::string& kind, const std::string& file,
               const std::string& runs_dir) {
    try {
        Json doc;
        try {
            doc = parse_json_file(file);
        } catch (const std::exception& e) {
            throw MalformedFile(file, e.what());
        }

        std::string target_run;
        long smells = 0, vulns = 0;
        std::optional<double> q4;
        if (kind == "issues") {
            IssueReport report;
            try {
                report = issue_report_from_json(doc);
            } catch (const std::exception& e) {
                throw MalformedFile(file, e.what());
            }
            target_run = report.run_id;
            smells = report.smells();
            vulns = report.vulnerabilities();
        } else if (kind == "manual") {
            ManualTestSession session;
            try {
                session = manual_session_from_json(doc);
            } catch (const std::exception& e) {
                throw MalformedFile(file, e.what());
            }
            target_run = session.run_id;
            q4 = session.failure_rate();
        } else {
            throw ConfigError("unknown ingest kind '" + kind + "' (use issues or manual)");
        }

        for (StoredRecord& stored : load_stored_records(runs_dir)) {
            if (run_id(stored.record.config) != target_run) continue;
            if (kind == "issues") {
                stored.record.quality.code_smells = smells;
                stored.record.quality.vulnerabilities = vulns;
            } else {
                stored.record.quality.human_bug_rate = q4;
            }
            write_file(stored.path, to_json(stored.record).dump(2) + "\n");
            std::cout << target_run << ": " << kind << " ingested\n";
            return 0;
        }
        throw UnknownRun(target_run);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int cmd_report(const std::string& runs_dir, const std::string& out_dir) {
    try {
        std::vector<StoredRecord> stored = load_stored_records(runs_dir);
        if (stored.empty()) {
            std::cerr << "no runs found under '" << runs_dir << "'\n";
            return 1;
        }
        std::vector<RunRecord> records;
        for (StoredRecord& s : stored) records.push_back(std::move(s.record));
        emit_report(standard_anova_suite(records), records, out_dir);
        std::cout << "report written to " << out_dir << " (" << records.size() << " runs)\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int cmd_validate(const std::string& config_path) {
    try {
        const ExperimentConfig cfg = ExperimentConfig::load(config_path);
        TemplateLibrary::load_dir(cfg.templates_dir);
        std::cout << "config ok: " << cfg.projects.size() << " projects x "
                  << cfg.processes.size() << " processes x " << cfg.models.size()
                  << " models = " << cfg.matrix_size() << " cells\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

} // namespace swproc
