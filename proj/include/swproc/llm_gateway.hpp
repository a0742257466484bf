#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "swproc/domain.hpp"
#include "swproc/errors.hpp"

namespace swproc {

struct CompletionRequest {
    std::string model_label;
    std::string system_prompt;
    std::string user_prompt;
    double temperature = 0.0;
    int max_output_tokens = 4096;
};

struct CompletionResponse {
    std::string text;
    long prompt_tokens = 0;
    long completion_tokens = 0;
    double latency_s = 0.0;
};

/// Identifies one scheduled completion. Playback fixtures are keyed on this
/// rather than on prompt content, so canned responses survive prompt edits.
struct CompletionKey {
    std::string project_id;
    ProcessModel process = ProcessModel::Waterfall;
    RoleKind role = RoleKind::ProjectManager;
    Phase phase{PhaseKind::Requirements, std::nullopt};
    int attempt = 0;

    /// "project|process|Role|PhaseKind[#sprint]|aN"
    std::string str() const;
};

class ProviderError : public Error {
public:
    ProviderError(int status, const std::string& body)
        : Error("provider error (status " + std::to_string(status) + "): " + body),
          status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

class TimeoutError : public Error {
public:
    explicit TimeoutError(const std::string& what) : Error("timeout: " + what) {}
};

class PlaybackMiss : public Error {
public:
    explicit PlaybackMiss(const std::string& key) : Error("playback miss for key '" + key + "'") {}
};

/// A completion provider. One backend handle may serve many concurrent runs.
class CompletionBackend {
public:
    virtual ~CompletionBackend() = default;
    virtual CompletionResponse complete(const CompletionRequest& req,
                                        const CompletionKey& key) = 0;
};

/// Deterministic playback backend for tests and desk-scale replication.
/// Entries map key strings to {text, prompt_tokens?, completion_tokens?,
/// latency?}. Missing token counts fall back to ceil(chars/4); missing
/// latency means 0.
class PlaybackBackend final : public CompletionBackend {
public:
    struct Entry {
        std::string text;
        std::optional<long> prompt_tokens;
        std::optional<long> completion_tokens;
        double latency_s = 0.0;
    };

    PlaybackBackend() = default;
    static PlaybackBackend from_file(const std::string& path);

    void add(const std::string& key, Entry entry);
    CompletionResponse complete(const CompletionRequest& req, const CompletionKey& key) override;

private:
    std::unordered_map<std::string, Entry> entries_;
};

/// Client for an OpenAI-compatible chat-completions endpoint.
/// POSTs {base_url}/chat/completions and reads choices[0].message.content
/// plus usage.{prompt_tokens, completion_tokens}. Transient failures
/// (status 429/5xx, transport errors) are retried with exponential backoff.
class LiveBackend final : public CompletionBackend {
public:
    struct Options {
        std::string base_url;        // e.g. "https://api.openai.com/v1"
        std::string credential_env;  // env var holding the bearer token
        double timeout_s = 120.0;
        int max_retries = 2;
        double backoff_base_s = 0.5;
    };

    explicit LiveBackend(Options opts);
    CompletionResponse complete(const CompletionRequest& req, const CompletionKey& key) override;

private:
    Options opts_;
    std::string scheme_host_;  // split from base_url
    std::string path_prefix_;
};

struct LedgerEntry {
    RoleKind role = RoleKind::ProjectManager;
    Phase phase{PhaseKind::Requirements, std::nullopt};
    long prompt_tokens = 0;
    long completion_tokens = 0;
    double latency_s = 0.0;
};

/// Per-run token and latency accounting. C1 = total_tokens(), C2 =
/// total_latency_s(). Owned and mutated by a single run task.
class TokenLedger {
public:
    void record(RoleKind role, const Phase& phase, const CompletionResponse& resp);

    long total_tokens() const;
    double total_latency_s() const;
    const std::vector<LedgerEntry>& entries() const { return entries_; }

private:
    std::vector<LedgerEntry> entries_;
};

} // namespace swproc
