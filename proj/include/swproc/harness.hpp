#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swproc/domain.hpp"
#include "swproc/errors.hpp"
#include "swproc/llm_gateway.hpp"

namespace swproc {

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

class UnknownRun : public Error {
public:
    explicit UnknownRun(const std::string& run_id)
        : Error("no persisted run with id '" + run_id + "'") {}
};

class MalformedFile : public Error {
public:
    MalformedFile(const std::string& path, const std::string& why)
        : Error("malformed file '" + path + "': " + why) {}
};

/// One model column of the experiment matrix: either a playback fixture or
/// a live OpenAI-compatible endpoint (credential read from an environment
/// variable, never stored).
struct ModelSpec {
    std::string label;
    std::string playback_file;  // non-empty selects playback
    LiveBackend::Options live;
};

struct ExperimentConfig {
    std::vector<ProjectSpec> projects;
    std::vector<ProcessModel> processes;
    std::vector<ModelSpec> models;
    RunLimits limits;
    std::uint64_t seed = 0;
    int parallelism = 1;
    std::string output_dir;
    std::string templates_dir;

    /// Parses and validates; file references and relative paths resolve
    /// against the config file's directory.
    static ExperimentConfig load(const std::string& path);

    std::size_t matrix_size() const {
        return projects.size() * processes.size() * models.size();
    }
};

/// A record together with where it lives, so ingestion can re-persist it.
struct StoredRecord {
    RunRecord record;
    std::string path;  // the record.json file
};

/// All record.json files under runs_dir, in sorted path order.
std::vector<StoredRecord> load_stored_records(const std::string& runs_dir);

/// Canonical run directory for a cell: {runs_root}/{project}/{process}/{model}.
std::string run_dir_for(const std::string& runs_root, const RunConfig& cfg);

int cmd_run(const std::string& config_path, const std::optional<std::string>& out_override,
            const std::optional<std::uint64_t>& seed_override);
int cmd_ingest(const std::string& kind, const std::string& file, const std::string& runs_dir);
int cmd_report(const std::string& runs_dir, const std::string& out_dir);
int cmd_validate(const std::string& config_path);

} // namespace swproc
