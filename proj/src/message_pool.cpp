#include "swproc/message_pool.hpp"

namespace swproc {

std::string to_string(MessageKind k) {
    switch (k) {
        case MessageKind::RequirementDoc: return "RequirementDoc";
        case MessageKind::DesignDoc: return "DesignDoc";
        case MessageKind::TestPlan: return "TestPlan";
        case MessageKind::CodeBundle: return "CodeBundle";
        case MessageKind::TestReport: return "TestReport";
        case MessageKind::DeploymentNote: return "DeploymentNote";
        case MessageKind::SprintPlan: return "SprintPlan";
        case MessageKind::SprintRetro: return "SprintRetro";
    }
    return "?";
}

MessageKind parse_message_kind(const std::string& name) {
    static const std::pair<const char*, MessageKind> table[] = {
        {"RequirementDoc", MessageKind::RequirementDoc},
        {"DesignDoc", MessageKind::DesignDoc},
        {"TestPlan", MessageKind::TestPlan},
        {"CodeBundle", MessageKind::CodeBundle},
        {"TestReport", MessageKind::TestReport},
        {"DeploymentNote", MessageKind::DeploymentNote},
        {"SprintPlan", MessageKind::SprintPlan},
        {"SprintRetro", MessageKind::SprintRetro},
    };
    for (const auto& [n, k] : table)
        if (name == n) return k;
    throw Error("unknown message kind: '" + name + "'");
}

Message MessagePool::publish(MessageDraft draft) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (closed_) throw PoolClosed();
    Message msg;
    msg.id = log_.size() + 1;
    msg.sender = draft.sender;
    msg.phase = draft.phase;
    msg.kind = draft.kind;
    msg.content = std::move(draft.content);
    msg.artifact_refs = std::move(draft.artifact_refs);
    msg.send_to = std::move(draft.send_to);
    log_.push_back(msg);
    return msg;
}

SubscriptionId MessagePool::subscribe(RoleKind subscriber, MessageFilter filter) {
    std::lock_guard<std::mutex> lock(mutex_);
    const SubscriptionId id = next_sub_++;
    subs_[id] = Subscription{subscriber, std::move(filter), 0};
    return id;
}

bool MessagePool::matches(const Subscription& sub, const Message& msg) {
    if (!sub.filter.kinds.empty() && !sub.filter.kinds.count(msg.kind)) return false;
    if (!sub.filter.senders.empty() && !sub.filter.senders.count(msg.sender)) return false;
    if (!msg.send_to.empty() && !msg.send_to.count(sub.subscriber)) return false;
    return true;
}

std::vector<Message> MessagePool::poll(SubscriptionId sub_id) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = subs_.find(sub_id);
    if (it == subs_.end()) throw UnknownSubscription(sub_id);
    Subscription& sub = it->second;
    std::vector<Message> out;
    for (std::uint64_t i = sub.cursor; i < log_.size(); ++i) {
        if (matches(sub, log_[i])) out.push_back(log_[i]);
    }
    sub.cursor = log_.size();
    return out;
}

std::vector<Message> MessagePool::transcript() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return log_;
}

std::uint64_t MessagePool::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return log_.size();
}

void MessagePool::close() {
    std::lock_guard<std::mutex> lock(mutex_);
    closed_ = true;
}

bool MessagePool::closed() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return closed_;
}

} // namespace swproc
