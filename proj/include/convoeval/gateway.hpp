#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "convoeval/corpus.hpp"

namespace convoeval::gateway {

struct ModelSpec {
    std::string model_id;
    std::string endpoint_url;
    std::string credential_env;  // empty: endpoint needs no credential
    double temperature = 0.0;
    int max_tokens = 1024;
    double request_timeout_seconds = 60.0;
};

struct RetryPolicy {
    int max_attempts = 5;
    double base_seconds = 1.0;
    double factor = 2.0;
    double jitter = 0.5;  // delay scaled by uniform [1-jitter, 1+jitter]
};

struct TokenUsage {
    std::int64_t prompt_tokens = 0;
    std::int64_t completion_tokens = 0;
};

struct Completion {
    std::string text;
    std::optional<TokenUsage> usage;
    int attempts = 1;
    std::string timestamp;  // when the endpoint produced it (cache keeps it)
};

/// Digest identifying one canonical request: a pure function of
/// (model_id, endpoint_url, system_message, user_message, temperature,
/// max_tokens), serialized with sorted keys and no insignificant whitespace.
std::string cache_key(const ModelSpec& spec, const std::string& system_message,
                      const std::string& user_message);

/// One JSON record per key under the cache directory; writes are atomic
/// (temp file + rename). Corrupt records read as a miss and get overwritten.
class ResponseCache {
public:
    explicit ResponseCache(std::filesystem::path dir);

    std::optional<Completion> get(const std::string& key);
    void put(const std::string& key, const ModelSpec& spec, const std::string& system_message,
             const std::string& user_message, const Completion& completion);

    std::uint64_t hits() const { return hits_.load(); }
    std::uint64_t misses() const { return misses_.load(); }
    std::uint64_t corrupt_records() const { return corrupt_.load(); }

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::uint64_t> misses_{0};
    std::atomic<std::uint64_t> corrupt_{0};
};

/// One chat completion. Sends system + user messages, returns the first
/// choice's content. Transport failures and 429/5xx statuses are retried
/// with exponential backoff before CollectionError; empty content raises
/// EmptyResponseError without retry.
Completion complete(const ModelSpec& spec, const std::string& system_message,
                    const std::string& user_message, const RetryPolicy& retry = {});

struct CachedCompletion {
    Completion completion;
    bool cache_hit = false;
};

/// Cache-through variant of complete().
CachedCompletion cached_complete(const ModelSpec& spec, const std::string& system_message,
                                 const std::string& user_message, ResponseCache& cache,
                                 const RetryPolicy& retry = {});

/// Outcome of one (question, model) pair.
struct CollectedResponse {
    bool ok = false;
    std::string text;
    std::string error;
    std::string timestamp;
    std::optional<TokenUsage> usage;
    bool cache_hit = false;
    int attempts = 0;
};

/// Responses for one question keyed by model id.
struct ResponseSet {
    std::string question_id;
    std::map<std::string, CollectedResponse> responses;
};

struct CollectOptions {
    int parallelism = 4;
    std::string system_message;  // collection sends bare questions by default
    RetryPolicy retry;
};

/// Attempts every (question, model) pair exactly once through the cache,
/// with at most `parallelism` requests in flight. Failures become explicit
/// failure entries; output follows corpus order.
std::vector<ResponseSet> collect_responses(const std::vector<corpus::QARecord>& records,
                                           const std::vector<ModelSpec>& specs,
                                           ResponseCache& cache, const CollectOptions& options);

/// JSON-lines round trip for response sets (sorted keys, corpus order).
std::string to_jsonl(const std::vector<ResponseSet>& sets);
std::vector<ResponseSet> response_sets_from_jsonl(const std::string& content);
void save_jsonl(const std::vector<ResponseSet>& sets, const std::filesystem::path& path);
std::vector<ResponseSet> load_response_sets(const std::filesystem::path& path);

}  // namespace convoeval::gateway
