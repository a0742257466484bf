#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "swproc/domain.hpp"

namespace swproc {

enum class MessageKind {
    RequirementDoc,
    DesignDoc,
    TestPlan,
    CodeBundle,
    TestReport,
    DeploymentNote,
    SprintPlan,
    SprintRetro,
};

std::string to_string(MessageKind k);
MessageKind parse_message_kind(const std::string& name);

/// One publish/subscribe unit. `send_to` empty means broadcast.
struct Message {
    std::uint64_t id = 0;  // assigned by the pool, strictly increasing
    RoleKind sender = RoleKind::ProjectManager;
    Phase phase{PhaseKind::Requirements, std::nullopt};
    MessageKind kind = MessageKind::RequirementDoc;
    std::string content;
    std::vector<std::string> artifact_refs;  // workspace-relative paths
    std::set<RoleKind> send_to;
};

/// Everything the pool needs to publish a message except the id.
struct MessageDraft {
    RoleKind sender = RoleKind::ProjectManager;
    Phase phase{PhaseKind::Requirements, std::nullopt};
    MessageKind kind = MessageKind::RequirementDoc;
    std::string content;
    std::vector<std::string> artifact_refs;
    std::set<RoleKind> send_to;
};

/// Profile filter for a subscription. Empty sets pass everything.
struct MessageFilter {
    std::set<MessageKind> kinds;
    std::set<RoleKind> senders;
};

using SubscriptionId = std::uint64_t;

class PoolClosed : public Error {
public:
    PoolClosed() : Error("message pool is closed: the run has completed") {}
};

class UnknownSubscription : public Error {
public:
    explicit UnknownSubscription(SubscriptionId id)
        : Error("unknown subscription id " + std::to_string(id)) {}
};

/// Shared append-only message log with profile-filtered subscriptions.
/// Safe for concurrent publish and poll within one run; ordering is defined
/// by serialized id assignment. New subscriptions see the full history
/// (cursor starts at 0).
class MessagePool {
public:
    MessagePool() = default;
    MessagePool(const MessagePool&) = delete;
    MessagePool& operator=(const MessagePool&) = delete;

    /// Assigns the next id (starting at 1) and appends to the log.
    Message publish(MessageDraft draft);

    SubscriptionId subscribe(RoleKind subscriber, MessageFilter filter = {});

    /// Returns matching messages with id > cursor, in id order, and advances
    /// the cursor to the current log end. Non-matching messages are skipped
    /// but still consumed: a poll observes the full log prefix.
    std::vector<Message> poll(SubscriptionId sub);

    /// Full log in id order.
    std::vector<Message> transcript() const;

    std::uint64_t size() const;

    /// Marks the run complete; further publishes throw PoolClosed.
    void close();
    bool closed() const;

private:
    struct Subscription {
        RoleKind subscriber;
        MessageFilter filter;
        std::uint64_t cursor = 0;
    };

    static bool matches(const Subscription& sub, const Message& msg);

    mutable std::mutex mutex_;
    std::vector<Message> log_;
    std::map<SubscriptionId, Subscription> subs_;
    SubscriptionId next_sub_ = 1;
    bool closed_ = false;
};

} // namespace swproc
