#include "convoeval/gateway.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "convoeval/errors.hpp"
#include "convoeval/util.hpp"

namespace convoeval::gateway {

using nlohmann::json;

std::string cache_key(const ModelSpec& spec, const std::string& system_message,
                      const std::string& user_message) {
    json canonical{{"endpoint_url", spec.endpoint_url},
                   {"max_tokens", spec.max_tokens},
                   {"model_id", spec.model_id},
                   {"system_message", system_message},
                   {"temperature", spec.temperature},
                   {"user_message", user_message}};
    return util::sha256_hex(canonical.dump());
}

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec && !std::filesystem::is_directory(dir_)) {
        throw IoError("cannot create cache directory: " + dir_.string());
    }
}

std::optional<Completion> ResponseCache::get(const std::string& key) {
    std::filesystem::path file = dir_ / (key + ".json");
    if (!std::filesystem::exists(file)) {
        misses_.fetch_add(1);
        return std::nullopt;
    }
    try {
        json j = json::parse(util::read_file(file));
        Completion completion;
        completion.text = j.at("response_text").get<std::string>();
        completion.timestamp = j.at("timestamp").get<std::string>();
        if (j.contains("usage") && !j["usage"].is_null()) {
            TokenUsage usage;
            usage.prompt_tokens = j["usage"].value("prompt_tokens", std::int64_t{0});
            usage.completion_tokens = j["usage"].value("completion_tokens", std::int64_t{0});
            completion.usage = usage;
        }
        if (completion.text.empty()) throw IoError("empty cached text");
        hits_.fetch_add(1);
        return completion;
    } catch (const std::exception&) {
        // corrupt record: treat as a miss; the caller's put() overwrites it
        corrupt_.fetch_add(1);
        misses_.fetch_add(1);
        return std::nullopt;
    }
}

void ResponseCache::put(const std::string& key, const ModelSpec& spec,
                        const std::string& system_message, const std::string& user_message,
                        const Completion& completion) {
    json usage = nullptr;
    if (completion.usage) {
        usage = {{"prompt_tokens", completion.usage->prompt_tokens},
                 {"completion_tokens", completion.usage->completion_tokens}};
    }
    json record{{"request",
                 {{"endpoint_url", spec.endpoint_url},
                  {"model_id", spec.model_id},
                  {"system_message", system_message},
                  {"user_message", user_message},
                  {"temperature", spec.temperature},
                  {"max_tokens", spec.max_tokens}}},
                {"response_text", completion.text},
                {"timestamp", completion.timestamp},
                {"usage", usage}};
    util::write_file_atomic(dir_ / (key + ".json"), record.dump(2) + "\n");
}

namespace {

bool retryable_status(int status) { return status == 429 || (status >= 500 && status < 600); }

void backoff_sleep(const RetryPolicy& retry, int completed_attempts) {
    double delay = retry.base_seconds;
    for (int i = 1; i < completed_attempts; ++i) delay *= retry.factor;
    if (retry.jitter > 0.0) {
        thread_local std::mt19937_64 rng{std::random_device{}()};
        std::uniform_real_distribution<double> scale(1.0 - retry.jitter, 1.0 + retry.jitter);
        delay *= scale(rng);
    }
    std::this_thread::sleep_for(std::chrono::duration<double>(std::max(delay, 0.0)));
}

std::optional<std::string> credential_for(const ModelSpec& spec) {
    if (spec.credential_env.empty()) return std::nullopt;
    const char* secret = std::getenv(spec.credential_env.c_str());
    if (secret == nullptr || *secret == '\0') {
        throw ConfigError("credential environment variable not set: " + spec.credential_env);
    }
    return std::string(secret);
}

}  // namespace

Completion complete(const ModelSpec& spec, const std::string& system_message,
                    const std::string& user_message, const RetryPolicy& retry) {
    auto url = util::parse_url(spec.endpoint_url);
    auto credential = credential_for(spec);

    json body{{"model", spec.model_id},
              {"messages",
               json::array({json{{"role", "system"}, {"content", system_message}},
                            json{{"role", "user"}, {"content", user_message}}})},
              {"temperature", spec.temperature},
              {"max_tokens", spec.max_tokens}};
    const std::string payload = body.dump();

    httplib::Client client(url.host, url.port);
    auto timeout = std::chrono::milliseconds(
        static_cast<long>(spec.request_timeout_seconds * 1000));
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    httplib::Headers headers;
    if (credential) headers.emplace("Authorization", "Bearer " + *credential);

    int attempts = 0;
    httplib::Result res;
    const int max_attempts = std::max(retry.max_attempts, 1);
    while (attempts < max_attempts) {
        ++attempts;
        res = client.Post(url.path, headers, payload, "application/json");
        if (res && !retryable_status(res->status)) break;
        if (attempts < max_attempts) backoff_sleep(retry, attempts);
    }
    if (!res) {
        throw CollectionError("transport failure for " + spec.model_id + " at " +
                                  spec.endpoint_url,
                              0, attempts);
    }
    if (res->status != 200) {
        throw CollectionError("endpoint returned status " + std::to_string(res->status) +
                                  " for " + spec.model_id,
                              res->status, attempts);
    }

    json reply;
    try {
        reply = json::parse(res->body);
    } catch (const json::parse_error& e) {
        throw CollectionError(std::string("response body is not JSON: ") + e.what(), res->status,
                              attempts);
    }
    std::string content;
    try {
        content = reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception&) {
        throw CollectionError("response missing choices[0].message.content", res->status,
                              attempts);
    }
    if (content.empty()) {
        throw EmptyResponseError("empty completion content from " + spec.model_id);
    }

    Completion completion;
    completion.text = std::move(content);
    completion.attempts = attempts;
    completion.timestamp = util::iso8601_now();
    if (reply.contains("usage") && reply["usage"].is_object()) {
        TokenUsage usage;
        usage.prompt_tokens = reply["usage"].value("prompt_tokens", std::int64_t{0});
        usage.completion_tokens = reply["usage"].value("completion_tokens", std::int64_t{0});
        completion.usage = usage;
    }
    return completion;
}

CachedCompletion cached_complete(const ModelSpec& spec, const std::string& system_message,
                                 const std::string& user_message, ResponseCache& cache,
                                 const RetryPolicy& retry) {
    const std::string key = cache_key(spec, system_message, user_message);
    if (auto hit = cache.get(key)) {
        return {std::move(*hit), true};
    }
    Completion fresh = complete(spec, system_message, user_message, retry);
    cache.put(key, spec, system_message, user_message, fresh);
    return {std::move(fresh), false};
}

std::vector<ResponseSet> collect_responses(const std::vector<corpus::QARecord>& records,
                                           const std::vector<ModelSpec>& specs,
                                           ResponseCache& cache, const CollectOptions& options) {
    if (options.parallelism < 1) throw ConfigError("parallelism must be >= 1");

    struct Task {
        std::size_t question_index;
        std::size_t model_index;
    };
    std::vector<Task> tasks;
    tasks.reserve(records.size() * specs.size());
    for (std::size_t q = 0; q < records.size(); ++q) {
        for (std::size_t m = 0; m < specs.size(); ++m) tasks.push_back({q, m});
    }

    std::vector<std::vector<CollectedResponse>> results(
        records.size(), std::vector<CollectedResponse>(specs.size()));

    std::atomic<std::size_t> next_task{0};
    auto worker = [&]() {
        while (true) {
            std::size_t index = next_task.fetch_add(1);
            if (index >= tasks.size()) return;
            const Task& task = tasks[index];
            const ModelSpec& spec = specs[task.model_index];
            const corpus::QARecord& record = records[task.question_index];
            CollectedResponse& out = results[task.question_index][task.model_index];
            try {
                auto cached = cached_complete(spec, options.system_message, record.question_text,
                                              cache, options.retry);
                out.ok = true;
                out.text = std::move(cached.completion.text);
                out.timestamp = cached.completion.timestamp;
                out.usage = cached.completion.usage;
                out.attempts = cached.completion.attempts;
                out.cache_hit = cached.cache_hit;
            } catch (const CollectionError& e) {
                out.ok = false;
                out.error = e.what();
                out.attempts = e.attempts;
            } catch (const std::exception& e) {
                out.ok = false;
                out.error = e.what();
            }
        }
    };

    const std::size_t thread_count =
        std::min<std::size_t>(static_cast<std::size_t>(options.parallelism),
                              std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    std::vector<ResponseSet> sets;
    sets.reserve(records.size());
    for (std::size_t q = 0; q < records.size(); ++q) {
        ResponseSet set;
        set.question_id = records[q].question_id;
        for (std::size_t m = 0; m < specs.size(); ++m) {
            set.responses.emplace(specs[m].model_id, std::move(results[q][m]));
        }
        sets.push_back(std::move(set));
    }
    return sets;
}

std::string to_jsonl(const std::vector<ResponseSet>& sets) {
    std::string out;
    for (const ResponseSet& set : sets) {
        json responses = json::object();
        for (const auto& [model_id, r] : set.responses) {
            json rj{{"ok", r.ok}};
            if (r.ok) {
                rj["text"] = r.text;
                rj["timestamp"] = r.timestamp;
                rj["cache_hit"] = r.cache_hit;
                if (r.usage) {
                    rj["usage"] = {{"prompt_tokens", r.usage->prompt_tokens},
                                   {"completion_tokens", r.usage->completion_tokens}};
                }
            } else {
                rj["error"] = r.error;
            }
            if (r.attempts > 0) rj["attempts"] = r.attempts;
            responses[model_id] = std::move(rj);
        }
        json line{{"question_id", set.question_id}, {"responses", std::move(responses)}};
        out += line.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<ResponseSet> response_sets_from_jsonl(const std::string& content) {
    std::vector<ResponseSet> sets;
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw IoError("responses line " + std::to_string(line_no) + ": " + e.what());
        }
        ResponseSet set;
        try {
            set.question_id = j.at("question_id").get<std::string>();
            for (const auto& [model_id, rj] : j.at("responses").items()) {
                CollectedResponse r;
                r.ok = rj.at("ok").get<bool>();
                if (r.ok) {
                    r.text = rj.at("text").get<std::string>();
                    r.timestamp = rj.value("timestamp", std::string{});
                    r.cache_hit = rj.value("cache_hit", false);
                    if (rj.contains("usage")) {
                        TokenUsage usage;
                        usage.prompt_tokens = rj["usage"].value("prompt_tokens", std::int64_t{0});
                        usage.completion_tokens =
                            rj["usage"].value("completion_tokens", std::int64_t{0});
                        r.usage = usage;
                    }
                } else {
                    r.error = rj.value("error", std::string{});
                }
                r.attempts = rj.value("attempts", 0);
                set.responses.emplace(model_id, std::move(r));
            }
        } catch (const json::exception& e) {
            throw IoError("responses line " + std::to_string(line_no) + ": " + e.what());
        }
        sets.push_back(std::move(set));
    }
    return sets;
}

void save_jsonl(const std::vector<ResponseSet>& sets, const std::filesystem::path& path) {
    util::write_file_atomic(path, to_jsonl(sets));
}

std::vector<ResponseSet> load_response_sets(const std::filesystem::path& path) {
    return response_sets_from_jsonl(util::read_file(path));
}

}  // namespace convoeval::gateway
