#include "swproc/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>

namespace swproc {

namespace fs = std::filesystem;

namespace {

bool is_doc_kind(MessageKind kind) {
    return kind != MessageKind::CodeBundle;
}

long count_nonblank_lines(const std::string& content) {
    long loc = 0;
    bool line_has_ink = false;
    for (const char c : content) {
        if (c == '\n') {
            if (line_has_ink) ++loc;
            line_has_ink = false;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            line_has_ink = true;
        }
    }
    if (line_has_ink) ++loc;
    return loc;
}

} // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

Workspace::Workspace(std::string run_dir) : run_dir_(std::move(run_dir)) {
    fs::create_directories(fs::path(run_dir_) / "workspace");
    fs::create_directories(fs::path(run_dir_) / "snapshots");
}

std::string Workspace::workspace_dir() const {
    return (fs::path(run_dir_) / "workspace").string();
}

Artifact Workspace::append_version(const std::string& path, const std::string& content,
                                   MessageKind kind) {
    if (!is_safe_relative_path(path) || path.rfind(".history/", 0) == 0)
        throw PathEscape(path);

    auto& versions = history_[path];
    versions.push_back({kind, content, fnv1a_hex(content)});
    const int version = static_cast<int>(versions.size());
    live_[path] = version;

    const fs::path ws = fs::path(run_dir_) / "workspace";
    write_file((ws / path).string(), content);
    write_file((ws / ".history" / path / std::to_string(version)).string(), content);

    return {path, kind, version, content, versions.back().content_hash};
}

std::vector<Artifact> Workspace::write_bundle(const CodeBundle& bundle) {
    std::vector<Artifact> written;
    for (const CodeFile& file : bundle.files)
        written.push_back(append_version(file.path, file.content, MessageKind::CodeBundle));
    return written;
}

Artifact Workspace::write_doc(const std::string& path, const Json& doc, MessageKind kind) {
    return append_version(path, doc.dump(2) + "\n", kind);
}

Artifact Workspace::write_text(const std::string& path, const std::string& content,
                               MessageKind kind) {
    return append_version(path, content, kind);
}

SizeMetrics Workspace::measure_size() const {
    SizeMetrics size;
    for (const auto& [path, version] : live_) {
        const Version& v = history_.at(path)[version - 1];
        ++size.files_all;
        if (is_doc_kind(v.kind)) continue;
        ++size.files;
        size.loc += count_nonblank_lines(v.content);
    }
    return size;
}

Snapshot Workspace::snapshot(int sprint_index, const std::string& created_at) {
    if (std::find(snapshot_indices_.begin(), snapshot_indices_.end(), sprint_index) !=
        snapshot_indices_.end())
        throw DuplicateSnapshot(sprint_index);
    const fs::path file =
        fs::path(run_dir_) / "snapshots" / ("sprint_" + std::to_string(sprint_index) + ".json");
    if (fs::exists(file)) throw DuplicateSnapshot(sprint_index);

    Snapshot snap;
    snap.sprint_index = sprint_index;
    snap.created_at = created_at;
    for (const auto& [path, version] : live_) {
        snap.manifest.push_back({path, version, history_.at(path)[version - 1].content_hash});
    }

    Json manifest = Json::array();
    for (const SnapshotEntry& e : snap.manifest)
        manifest.push_back(Json{{"path", e.path},
                                {"version", e.version},
                                {"content_hash", e.content_hash}});
    const Json doc{{"sprint_index", snap.sprint_index},
                   {"created_at", snap.created_at},
                   {"manifest", manifest}};
    write_file(file.string(), doc.dump(2) + "\n");

    snapshot_indices_.push_back(sprint_index);
    return snap;
}

void Workspace::restore(const Snapshot& snap) {
    std::vector<std::string> to_remove;
    for (const auto& [path, version] : live_) {
        (void)version;
        const bool in_manifest =
            std::any_of(snap.manifest.begin(), snap.manifest.end(),
                        [&](const SnapshotEntry& e) { return e.path == path; });
        if (!in_manifest) to_remove.push_back(path);
    }
    for (const std::string& path : to_remove) {
        fs::remove(fs::path(run_dir_) / "workspace" / path);
        live_.erase(path);
    }
    for (const SnapshotEntry& e : snap.manifest) {
        // copy: append_version grows the vector this element lives in
        const Version v = history_.at(e.path).at(static_cast<std::size_t>(e.version) - 1);
        append_version(e.path, v.content, v.kind);
    }
}

std::vector<Artifact> Workspace::latest() const {
    std::vector<Artifact> out;
    for (const auto& [path, version] : live_) {
        const Version& v = history_.at(path)[version - 1];
        out.push_back({path, v.kind, version, v.content, v.content_hash});
    }
    return out;
}

} // namespace swproc
