#include "convoeval/stub_server.hpp"

#include <chrono>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace convoeval::testing {

using nlohmann::json;

struct StubServer::Impl {
    Script script;
    httplib::Server server;
    std::thread thread;

    mutable std::mutex mutex;  // guards script rule counters and the log
    std::vector<RequestRecord> log;
    std::atomic<int> in_flight{0};
    std::atomic<int> max_in_flight{0};

    struct InFlightGuard {
        Impl& impl;
        explicit InFlightGuard(Impl& impl) : impl(impl) {
            int current = impl.in_flight.fetch_add(1) + 1;
            int seen = impl.max_in_flight.load();
            while (current > seen && !impl.max_in_flight.compare_exchange_weak(seen, current)) {
            }
        }
        ~InFlightGuard() { impl.in_flight.fetch_sub(1); }
    };

    void record(RequestRecord record) {
        std::lock_guard<std::mutex> lock(mutex);
        log.push_back(std::move(record));
    }

    // First matching chat rule, honoring per-rule use counts.
    std::optional<ChatRule> take_chat_rule(const std::string& model, const std::string& user) {
        std::lock_guard<std::mutex> lock(mutex);
        for (ChatRule& rule : script.chat_rules) {
            if (rule.times < 0) continue;  // expired
            if (!rule.match_model.empty() && rule.match_model != model) continue;
            if (!rule.match_user_contains.empty() &&
                user.find(rule.match_user_contains) == std::string::npos) {
                continue;
            }
            ChatRule chosen = rule;
            if (rule.times > 0 && --rule.times == 0) rule.times = -1;
            return chosen;
        }
        return std::nullopt;
    }

    std::optional<EmotionRule> take_emotion_rule(const std::string& text) {
        std::lock_guard<std::mutex> lock(mutex);
        for (EmotionRule& rule : script.emotion_rules) {
            if (rule.times < 0) continue;
            if (!rule.match_text_contains.empty() &&
                text.find(rule.match_text_contains) == std::string::npos) {
                continue;
            }
            EmotionRule chosen = rule;
            if (rule.times > 0 && --rule.times == 0) rule.times = -1;
            return chosen;
        }
        return std::nullopt;
    }

    void handle_chat(const httplib::Request& req, httplib::Response& res) {
        InFlightGuard guard(*this);
        std::string model, user;
        try {
            json body = json::parse(req.body);
            model = body.value("model", std::string{});
            for (const auto& message : body.value("messages", json::array())) {
                if (message.value("role", std::string{}) == "user") {
                    user = message.value("content", std::string{});
                }
            }
        } catch (const json::exception&) {
            res.status = 400;
            return;
        }
        record({"chat", model, user, req.get_header_value("Authorization")});

        auto rule = take_chat_rule(model, user);
        int delay_ms = rule ? rule->delay_ms : 0;
        if (delay_ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
        if (rule && rule->status != 200) {
            res.status = rule->status;
            res.set_content("{\"error\":\"injected\"}", "application/json");
            return;
        }
        std::string text = rule ? rule->reply_text : script.default_reply;
        json reply{{"choices",
                    json::array({json{{"message",
                                       {{"role", "assistant"}, {"content", text}}}}})},
                   {"usage",
                    {{"prompt_tokens", static_cast<std::int64_t>(user.size())},
                     {"completion_tokens", static_cast<std::int64_t>(text.size())}}}};
        res.set_content(reply.dump(), "application/json");
    }

    void handle_emotion(const httplib::Request& req, httplib::Response& res) {
        InFlightGuard guard(*this);
        std::string text;
        try {
            text = json::parse(req.body).value("text", std::string{});
        } catch (const json::exception&) {
            res.status = 400;
            return;
        }
        record({"emotion", "", text, req.get_header_value("Authorization")});

        auto rule = take_emotion_rule(text);
        int delay_ms = rule ? rule->delay_ms : 0;
        if (delay_ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
        if (rule && rule->status != 200) {
            res.status = rule->status;
            return;
        }
        const auto& labels = rule ? rule->labels : script.default_labels;
        json array = json::array();
        for (const auto& [label, score] : labels) {
            array.push_back({{"label", label}, {"score", score}});
        }
        res.set_content(json{{"labels", std::move(array)}}.dump(), "application/json");
    }
};

StubServer::StubServer(Script script, int port) : impl_(std::make_unique<Impl>()) {
    impl_->script = std::move(script);
    impl_->server.new_task_queue = [] { return new httplib::ThreadPool(16); };
    impl_->server.Post("/v1/chat/completions",
                       [this](const httplib::Request& req, httplib::Response& res) {
                           impl_->handle_chat(req, res);
                       });
    impl_->server.Post("/classify", [this](const httplib::Request& req, httplib::Response& res) {
        impl_->handle_emotion(req, res);
    });

    if (port == 0) {
        port_ = impl_->server.bind_to_any_port("127.0.0.1");
        if (port_ <= 0) throw std::runtime_error("stub server: no free ephemeral port");
    } else {
        if (!impl_->server.bind_to_port("127.0.0.1", port)) {
            throw std::runtime_error("stub server: port already bound: " + std::to_string(port));
        }
        port_ = port;
    }
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
}

StubServer::~StubServer() {
    impl_->server.stop();
    if (impl_->thread.joinable()) impl_->thread.join();
}

std::string StubServer::chat_url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
}

std::string StubServer::emotion_url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/classify";
}

std::vector<RequestRecord> StubServer::request_log() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->log;
}

std::size_t StubServer::request_count() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->log.size();
}

int StubServer::max_in_flight() const { return impl_->max_in_flight.load(); }

void StubServer::reset_instrumentation() {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->log.clear();
    impl_->max_in_flight.store(0);
}

}  // namespace convoeval::testing
