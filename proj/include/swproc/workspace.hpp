#pragma once

#include <map>
#include <string>
#include <vector>

#include "swproc/domain.hpp"
#include "swproc/errors.hpp"
#include "swproc/json_io.hpp"
#include "swproc/message_pool.hpp"
#include "swproc/output_parsers.hpp"

namespace swproc {

class PathEscape : public Error {
public:
    explicit PathEscape(const std::string& path)
        : Error("artifact path escapes the workspace: '" + path + "'") {}
};

class DuplicateSnapshot : public Error {
public:
    explicit DuplicateSnapshot(int sprint_index)
        : Error("snapshot for sprint " + std::to_string(sprint_index) + " already exists") {}
};

/// One versioned deliverable in the store.
struct Artifact {
    std::string path;  // workspace-relative
    MessageKind kind = MessageKind::CodeBundle;
    int version = 0;
    std::string content;
    std::string content_hash;
};

struct SnapshotEntry {
    std::string path;
    int version = 0;
    std::string content_hash;
};

/// Immutable manifest of the store at the end of a sprint.
struct Snapshot {
    int sprint_index = 0;
    std::vector<SnapshotEntry> manifest;  // sorted by path
    std::string created_at;
};

/// FNV-1a 64-bit digest over raw bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Versioned artifact store for one run. Owns two directories under the run
/// directory: workspace/ (live files plus .history/) and snapshots/.
/// Append-only: a (path, version) pair is never overwritten.
class Workspace {
public:
    explicit Workspace(std::string run_dir);

    std::vector<Artifact> write_bundle(const CodeBundle& bundle);
    Artifact write_doc(const std::string& path, const Json& doc, MessageKind kind);
    Artifact write_text(const std::string& path, const std::string& content, MessageKind kind);

    /// S1 and S2 over code-kind artifacts at their latest versions.
    SizeMetrics measure_size() const;

    Snapshot snapshot(int sprint_index, const std::string& created_at);

    /// Brings the live view back to a snapshot's file set. Restored content
    /// is appended as new versions; paths absent from the manifest are
    /// removed from the live view (their history stays).
    void restore(const Snapshot& snap);

    /// Latest version of every live path, sorted by path.
    std::vector<Artifact> latest() const;

    const std::string& run_dir() const { return run_dir_; }
    std::string workspace_dir() const;

private:
    struct Version {
        MessageKind kind;
        std::string content;
        std::string content_hash;
    };

    Artifact append_version(const std::string& path, const std::string& content,
                            MessageKind kind);

    std::string run_dir_;
    std::map<std::string, std::vector<Version>> history_;  // path -> versions, 1-based
    std::map<std::string, int> live_;                      // path -> live version
    std::vector<int> snapshot_indices_;
};

} // namespace swproc
