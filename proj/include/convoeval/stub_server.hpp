#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace convoeval::testing {

/// Scripted behavior for the chat-completions endpoint. Rules are evaluated
/// in order; the first match wins; unmatched requests get the default reply.
struct ChatRule {
    std::string match_model;          // empty: any model
    std::string match_user_contains;  // empty: any user message
    int status = 200;                 // non-200: error injection
    std::string reply_text;           // assistant content for 200 replies
    int delay_ms = 0;
    int times = 0;  // how many requests this rule consumes; 0 = unlimited
};

/// Scripted behavior for the emotion-classifier endpoint.
struct EmotionRule {
    std::string match_text_contains;  // empty: any text
    int status = 200;
    std::vector<std::pair<std::string, double>> labels;
    int delay_ms = 0;
    int times = 0;
};

struct Script {
    std::vector<ChatRule> chat_rules;
    std::string default_reply = "OK";
    std::vector<EmotionRule> emotion_rules;
    std::vector<std::pair<std::string, double>> default_labels = {{"neutral", 1.0}};
};

struct RequestRecord {
    std::string endpoint;  // "chat" or "emotion"
    std::string model_id;  // chat only
    std::string text;      // user message or classified text
    std::string authorization;
};

/// In-process HTTP fixture serving the chat-completions contract at
/// /v1/chat/completions and the emotion contract at /classify. Records a
/// full request log and the maximum number of concurrently in-flight
/// requests. Started on construction (ephemeral port when port = 0),
/// stopped on destruction.
class StubServer {
public:
    explicit StubServer(Script script, int port = 0);
    ~StubServer();

    StubServer(const StubServer&) = delete;
    StubServer& operator=(const StubServer&) = delete;

    int port() const { return port_; }
    std::string chat_url() const;
    std::string emotion_url() const;

    std::vector<RequestRecord> request_log() const;
    std::size_t request_count() const;
    int max_in_flight() const;
    void reset_instrumentation();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int port_ = 0;
};

}  // namespace convoeval::testing
