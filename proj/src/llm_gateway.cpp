#include "swproc/llm_gateway.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "swproc/json_io.hpp"

namespace swproc {

std::string CompletionKey::str() const {
    std::string s = project_id + "|" + to_string(process) + "|" + to_string(role) + "|" +
                    to_string(phase.kind);
    if (phase.sprint) s += "#" + std::to_string(*phase.sprint);
    s += "|a" + std::to_string(attempt);
    return s;
}

PlaybackBackend PlaybackBackend::from_file(const std::string& path) {
    PlaybackBackend backend;
    const Json doc = parse_json_file(path);
    const Json& entries = doc.contains("entries") ? doc.at("entries") : doc;
    if (!entries.is_object()) throw Error("playback file '" + path + "': expected an object of entries");
    for (const auto& [key, val] : entries.items()) {
        Entry e;
        e.text = val.at("text").get<std::string>();
        if (val.contains("prompt_tokens")) e.prompt_tokens = val.at("prompt_tokens").get<long>();
        if (val.contains("completion_tokens"))
            e.completion_tokens = val.at("completion_tokens").get<long>();
        e.latency_s = val.value("latency", 0.0);
        backend.add(key, std::move(e));
    }
    return backend;
}

void PlaybackBackend::add(const std::string& key, Entry entry) {
    entries_[key] = std::move(entry);
}

CompletionResponse PlaybackBackend::complete(const CompletionRequest& req,
                                             const CompletionKey& key) {
    (void)req;
    const std::string k = key.str();
    auto it = entries_.find(k);
    if (it == entries_.end()) throw PlaybackMiss(k);
    const Entry& e = it->second;
    CompletionResponse resp;
    resp.text = e.text;
    // chars/4 approximation when the fixture carries no counts
    resp.prompt_tokens = e.prompt_tokens ? *e.prompt_tokens : 0;
    resp.completion_tokens = e.completion_tokens
                                 ? *e.completion_tokens
                                 : static_cast<long>((e.text.size() + 3) / 4);
    resp.latency_s = e.latency_s;
    return resp;
}

LiveBackend::LiveBackend(Options opts) : opts_(std::move(opts)) {
    // split "scheme://host[:port]/prefix" into client target and path prefix
    const std::string& url = opts_.base_url;
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw Error("base_url must include a scheme: " + url);
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        scheme_host_ = url;
        path_prefix_.clear();
    } else {
        scheme_host_ = url.substr(0, path_start);
        path_prefix_ = url.substr(path_start);
        while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();
    }
}

CompletionResponse LiveBackend::complete(const CompletionRequest& req, const CompletionKey& key) {
    (void)key;  // live calls are keyed by the request itself
    if (req.system_prompt.empty() || req.user_prompt.empty())
        throw Error("completion request prompts must be non-empty");

    const char* cred = nullptr;
    if (!opts_.credential_env.empty()) cred = std::getenv(opts_.credential_env.c_str());

    Json body{{"model", req.model_label},
              {"messages",
               Json::array({Json{{"role", "system"}, {"content", req.system_prompt}},
                            Json{{"role", "user"}, {"content", req.user_prompt}}})},
              {"temperature", req.temperature},
              {"max_tokens", req.max_output_tokens}};
    const std::string payload = body.dump();

    std::string last_error = "no attempt made";
    for (int attempt = 0; attempt <= opts_.max_retries; ++attempt) {
        if (attempt > 0) {
            const double sleep_s = opts_.backoff_base_s * static_cast<double>(1 << (attempt - 1));
            std::this_thread::sleep_for(std::chrono::duration<double>(sleep_s));
        }

        httplib::Client client(scheme_host_);
        const auto timeout = std::chrono::duration<double>(opts_.timeout_s);
        client.set_connection_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(timeout));
        client.set_read_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(timeout));
        client.set_write_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(timeout));

        httplib::Headers headers;
        if (cred) headers.emplace("Authorization", std::string("Bearer ") + cred);

        const auto start = std::chrono::steady_clock::now();
        httplib::Result res =
            client.Post(path_prefix_ + "/chat/completions", headers, payload, "application/json");
        const double latency =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        if (!res) {
            const auto err = res.error();
            if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read ||
                err == httplib::Error::Write) {
                last_error = "transport timeout: " + httplib::to_string(err);
                if (attempt == opts_.max_retries) throw TimeoutError(last_error);
            } else {
                last_error = "transport error: " + httplib::to_string(err);
                if (attempt == opts_.max_retries) throw ProviderError(0, last_error);
            }
            continue;
        }
        if (res->status < 200 || res->status >= 300) {
            const bool transient = res->status == 429 || res->status >= 500;
            if (!transient || attempt == opts_.max_retries)
                throw ProviderError(res->status, res->body);
            last_error = "status " + std::to_string(res->status);
            continue;
        }

        Json doc;
        try {
            doc = Json::parse(res->body);
        } catch (const Json::parse_error& e) {
            throw ProviderError(res->status, std::string("unparseable body: ") + e.what());
        }
        CompletionResponse out;
        try {
            out.text = doc.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const Json::exception& e) {
            throw ProviderError(res->status, std::string("unexpected response shape: ") + e.what());
        }
        if (doc.contains("usage")) {
            out.prompt_tokens = doc["usage"].value("prompt_tokens", 0L);
            out.completion_tokens = doc["usage"].value("completion_tokens", 0L);
        }
        out.latency_s = latency;
        return out;
    }
    throw ProviderError(0, last_error);
}

void TokenLedger::record(RoleKind role, const Phase& phase, const CompletionResponse& resp) {
    entries_.push_back(LedgerEntry{role, phase, resp.prompt_tokens, resp.completion_tokens,
                                   resp.latency_s});
}

long TokenLedger::total_tokens() const {
    long total = 0;
    for (const auto& e : entries_) total += e.prompt_tokens + e.completion_tokens;
    return total;
}

double TokenLedger::total_latency_s() const {
    double total = 0;
    for (const auto& e : entries_) total += e.latency_s;
    return total;
}

} // namespace swproc
