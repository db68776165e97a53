#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "convoeval/errors.hpp"
#include "convoeval/gateway.hpp"
#include "convoeval/stub_server.hpp"
#include "convoeval/util.hpp"

using namespace convoeval;

namespace {

gateway::RetryPolicy fast_retry() {
    gateway::RetryPolicy retry;
    retry.base_seconds = 0.001;
    return retry;
}

gateway::ModelSpec spec_for(const testing::StubServer& server, const std::string& model_id) {
    gateway::ModelSpec spec;
    spec.model_id = model_id;
    spec.endpoint_url = server.chat_url();
    spec.request_timeout_seconds = 5.0;
    return spec;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("convoeval_test_" + util::sha256_hex(std::to_string(::getpid()) +
                                                     std::to_string(counter())).substr(0, 12));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int counter() {
        static int n = 0;
        return ++n;
    }
};

}  // namespace

TEST_CASE("cache key is pure and field-sensitive") {
    gateway::ModelSpec spec;
    spec.model_id = "m";
    spec.endpoint_url = "http://host/v1/chat/completions";
    spec.temperature = 0.0;
    spec.max_tokens = 1024;

    std::string base = gateway::cache_key(spec, "sys", "user");
    CHECK(base.size() == 64);
    CHECK(base.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(gateway::cache_key(spec, "sys", "user") == base);

    auto differs = [&](gateway::ModelSpec changed, const std::string& sys,
                       const std::string& user) {
        return gateway::cache_key(changed, sys, user) != base;
    };
    gateway::ModelSpec other = spec;
    other.model_id = "m2";
    CHECK(differs(other, "sys", "user"));
    other = spec;
    other.endpoint_url = "http://host2/v1/chat/completions";
    CHECK(differs(other, "sys", "user"));
    other = spec;
    other.temperature = 0.5;
    CHECK(differs(other, "sys", "user"));
    other = spec;
    other.max_tokens = 2048;
    CHECK(differs(other, "sys", "user"));
    CHECK(differs(spec, "sys2", "user"));
    CHECK(differs(spec, "sys", "user2"));
}

TEST_CASE("complete returns the first choice content") {
    testing::Script script;
    script.chat_rules.push_back({"", "say-ok", 200, "OK", 0, 0});
    testing::StubServer server(script);
    auto completion = gateway::complete(spec_for(server, "echo"), "", "say-ok", fast_retry());
    CHECK(completion.text == "OK");
    CHECK(completion.attempts == 1);
    REQUIRE(completion.usage.has_value());
}

TEST_CASE("429 twice then 200 succeeds on the third attempt") {
    testing::Script script;
    script.chat_rules.push_back({"", "", 429, "", 0, 2});
    script.default_reply = "fine";
    testing::StubServer server(script);
    auto completion = gateway::complete(spec_for(server, "m"), "", "q", fast_retry());
    CHECK(completion.text == "fine");
    CHECK(completion.attempts == 3);
    CHECK(server.request_count() == 3);
}

TEST_CASE("500 five times exhausts the retries") {
    testing::Script script;
    script.chat_rules.push_back({"", "", 500, "", 0, 0});
    testing::StubServer server(script);
    try {
        gateway::complete(spec_for(server, "m"), "", "q", fast_retry());
        FAIL("expected CollectionError");
    } catch (const CollectionError& e) {
        CHECK(e.attempts == 5);
        CHECK(e.last_status == 500);
    }
    CHECK(server.request_count() == 5);
}

TEST_CASE("non-retryable status fails immediately") {
    testing::Script script;
    script.chat_rules.push_back({"", "", 403, "", 0, 0});
    testing::StubServer server(script);
    try {
        gateway::complete(spec_for(server, "m"), "", "q", fast_retry());
        FAIL("expected CollectionError");
    } catch (const CollectionError& e) {
        CHECK(e.attempts == 1);
        CHECK(e.last_status == 403);
    }
}

TEST_CASE("empty content is an empty-response error") {
    testing::Script script;
    script.default_reply = "";
    testing::StubServer server(script);
    CHECK_THROWS_AS(gateway::complete(spec_for(server, "m"), "", "q", fast_retry()),
                    EmptyResponseError);
}

TEST_CASE("missing credential is a config error") {
    gateway::ModelSpec spec;
    spec.model_id = "m";
    spec.endpoint_url = "http://127.0.0.1:1/v1";
    spec.credential_env = "CONVOEVAL_TEST_NO_SUCH_VAR";
    CHECK_THROWS_AS(gateway::complete(spec, "", "q", fast_retry()), ConfigError);
}

TEST_CASE("credential is sent as a bearer header") {
    testing::Script script;
    testing::StubServer server(script);
    ::setenv("CONVOEVAL_TEST_SECRET", "s3cret", 1);
    auto spec = spec_for(server, "m");
    spec.credential_env = "CONVOEVAL_TEST_SECRET";
    gateway::complete(spec, "", "q", fast_retry());
    auto log = server.request_log();
    REQUIRE(log.size() == 1);
    CHECK(log[0].authorization == "Bearer s3cret");
}

TEST_CASE("cached_complete hits without network") {
    testing::Script script;
    script.default_reply = "cached text";
    testing::StubServer server(script);
    TempDir dir;
    gateway::ResponseCache cache(dir.path);
    auto spec = spec_for(server, "m");

    auto first = gateway::cached_complete(spec, "", "question", cache, fast_retry());
    CHECK_FALSE(first.cache_hit);
    CHECK(server.request_count() == 1);

    auto second = gateway::cached_complete(spec, "", "question", cache, fast_retry());
    CHECK(second.cache_hit);
    CHECK(second.completion.text == "cached text");
    CHECK(second.completion.timestamp == first.completion.timestamp);
    CHECK(server.request_count() == 1);  // no extra network call
    CHECK(cache.hits() == 1);
    CHECK(cache.misses() == 1);
}

TEST_CASE("different temperature misses the cache") {
    testing::Script script;
    testing::StubServer server(script);
    TempDir dir;
    gateway::ResponseCache cache(dir.path);
    auto spec = spec_for(server, "m");
    gateway::cached_complete(spec, "", "question", cache, fast_retry());
    spec.temperature = 0.7;
    auto result = gateway::cached_complete(spec, "", "question", cache, fast_retry());
    CHECK_FALSE(result.cache_hit);
    CHECK(server.request_count() == 2);
}

TEST_CASE("a hand-built cache record is returned verbatim") {
    TempDir dir;
    gateway::ResponseCache cache(dir.path);
    gateway::ModelSpec spec;
    spec.model_id = "m";
    spec.endpoint_url = "http://nowhere.invalid/v1";  // never contacted
    std::string key = gateway::cache_key(spec, "sys", "user");
    std::ofstream(dir.path / (key + ".json"))
        << R"({"request":{},"response_text":"handmade","timestamp":"2024-01-01T00:00:00Z",)"
        << R"("usage":null})";
    auto result = gateway::cached_complete(spec, "sys", "user", cache, fast_retry());
    CHECK(result.cache_hit);
    CHECK(result.completion.text == "handmade");
    CHECK(result.completion.timestamp == "2024-01-01T00:00:00Z");
}

TEST_CASE("a corrupt cache record reads as a miss and is overwritten") {
    testing::Script script;
    script.default_reply = "fresh";
    testing::StubServer server(script);
    TempDir dir;
    gateway::ResponseCache cache(dir.path);
    auto spec = spec_for(server, "m");
    std::string key = gateway::cache_key(spec, "", "q");
    std::ofstream(dir.path / (key + ".json")) << "{not json";

    auto result = gateway::cached_complete(spec, "", "q", cache, fast_retry());
    CHECK_FALSE(result.cache_hit);
    CHECK(result.completion.text == "fresh");
    CHECK(cache.corrupt_records() == 1);

    auto again = gateway::cached_complete(spec, "", "q", cache, fast_retry());
    CHECK(again.cache_hit);  // overwritten with a good record
}

TEST_CASE("collect_responses covers every pair in corpus order") {
    testing::Script script;
    script.chat_rules.push_back({"alpha", "", 200, "alpha says", 0, 0});
    script.chat_rules.push_back({"beta", "", 200, "beta says", 0, 0});
    testing::StubServer server(script);
    TempDir dir;
    gateway::ResponseCache cache(dir.path);

    std::vector<corpus::QARecord> records;
    for (int i = 0; i < 10; ++i) {
        records.push_back({"q" + std::to_string(i), "t", "question " + std::to_string(i),
                           "gold", 0, 0});
    }
    std::vector<gateway::ModelSpec> specs{spec_for(server, "alpha"), spec_for(server, "beta")};
    gateway::CollectOptions options;
    options.parallelism = 4;
    options.retry = fast_retry();

    auto sets = gateway::collect_responses(records, specs, cache, options);
    REQUIRE(sets.size() == 10);
    std::size_t entries = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        CHECK(sets[i].question_id == records[i].question_id);  // corpus order
        entries += sets[i].responses.size();
        CHECK(sets[i].responses.at("alpha").text == "alpha says");
        CHECK(sets[i].responses.at("beta").text == "beta says");
    }
    CHECK(entries == 20);
    CHECK(server.request_count() == 20);
}

TEST_CASE("parallelism 1 is strictly sequential") {
    testing::Script script;
    script.chat_rules.push_back({"", "", 200, "r", 5, 0});  // 5 ms per request
    testing::StubServer server(script);
    TempDir dir;
    gateway::ResponseCache cache(dir.path);

    std::vector<corpus::QARecord> records;
    for (int i = 0; i < 6; ++i) {
        records.push_back({"q" + std::to_string(i), "t", "question " + std::to_string(i),
                           "gold", 0, 0});
    }
    std::vector<gateway::ModelSpec> specs{spec_for(server, "m")};
    gateway::CollectOptions options;
    options.parallelism = 1;
    options.retry = fast_retry();
    gateway::collect_responses(records, specs, cache, options);
    CHECK(server.max_in_flight() == 1);
}

TEST_CASE("in-flight requests never exceed the parallelism bound") {
    testing::Script script;
    script.chat_rules.push_back({"", "", 200, "r", 20, 0});
    testing::StubServer server(script);
    TempDir dir;
    gateway::ResponseCache cache(dir.path);

    std::vector<corpus::QARecord> records;
    for (int i = 0; i < 12; ++i) {
        records.push_back({"q" + std::to_string(i), "t", "question " + std::to_string(i),
                           "gold", 0, 0});
    }
    std::vector<gateway::ModelSpec> specs{spec_for(server, "m")};
    gateway::CollectOptions options;
    options.parallelism = 3;
    options.retry = fast_retry();
    gateway::collect_responses(records, specs, cache, options);
    CHECK(server.max_in_flight() <= 3);
    CHECK(server.max_in_flight() >= 2);  // the delay forces real overlap
}

TEST_CASE("per-pair failures do not stop the run") {
    testing::Script script;
    script.chat_rules.push_back({"flaky", "", 500, "", 0, 0});
    script.chat_rules.push_back({"solid", "", 200, "good", 0, 0});
    testing::StubServer server(script);
    TempDir dir;
    gateway::ResponseCache cache(dir.path);

    std::vector<corpus::QARecord> records;
    for (int i = 0; i < 10; ++i) {
        records.push_back({"q" + std::to_string(i), "t", "question " + std::to_string(i),
                           "gold", 0, 0});
    }
    std::vector<gateway::ModelSpec> specs{spec_for(server, "flaky"), spec_for(server, "solid")};
    gateway::CollectOptions options;
    options.parallelism = 4;
    options.retry = fast_retry();
    auto sets = gateway::collect_responses(records, specs, cache, options);
    int failures = 0, successes = 0;
    for (const auto& set : sets) {
        if (!set.responses.at("flaky").ok) ++failures;
        if (set.responses.at("solid").ok) ++successes;
    }
    CHECK(failures == 10);
    CHECK(successes == 10);
}

TEST_CASE("a warm cache makes collection byte-deterministic with zero network") {
    testing::Script script;
    script.chat_rules.push_back({"alpha", "", 200, "alpha says", 0, 0});
    testing::StubServer server(script);
    TempDir dir;
    gateway::ResponseCache cache(dir.path);

    std::vector<corpus::QARecord> records{{"q1", "t", "question one", "gold", 0, 0},
                                          {"q2", "t", "question two", "gold", 0, 0}};
    std::vector<gateway::ModelSpec> specs{spec_for(server, "alpha")};
    gateway::CollectOptions options;
    options.parallelism = 2;
    options.retry = fast_retry();

    auto first = gateway::collect_responses(records, specs, cache, options);
    server.reset_instrumentation();
    gateway::ResponseCache warm(dir.path);
    auto second = gateway::collect_responses(records, specs, warm, options);
    CHECK(server.request_count() == 0);
    CHECK(gateway::to_jsonl(second) == gateway::to_jsonl(second));
    // identical except the cache_hit flag flips on the warm run
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(second[i].responses.at("alpha").text == first[i].responses.at("alpha").text);
        CHECK(second[i].responses.at("alpha").timestamp ==
              first[i].responses.at("alpha").timestamp);
        CHECK(second[i].responses.at("alpha").cache_hit);
    }
}

TEST_CASE("response sets round trip through jsonl") {
    std::vector<gateway::ResponseSet> sets(2);
    sets[0].question_id = "q1";
    gateway::CollectedResponse ok;
    ok.ok = true;
    ok.text = "hello";
    ok.timestamp = "2024-01-01T00:00:00Z";
    ok.attempts = 1;
    gateway::TokenUsage usage;
    usage.prompt_tokens = 3;
    usage.completion_tokens = 5;
    ok.usage = usage;
    sets[0].responses.emplace("m", ok);
    sets[1].question_id = "q2";
    gateway::CollectedResponse failed;
    failed.ok = false;
    failed.error = "endpoint returned status 500";
    failed.attempts = 5;
    sets[1].responses.emplace("m", failed);

    auto text = gateway::to_jsonl(sets);
    auto back = gateway::response_sets_from_jsonl(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].responses.at("m").text == "hello");
    CHECK(back[0].responses.at("m").usage->completion_tokens == 5);
    CHECK_FALSE(back[1].responses.at("m").ok);
    CHECK(back[1].responses.at("m").attempts == 5);
    CHECK(gateway::to_jsonl(back) == text);
}

TEST_CASE("parallelism below one is rejected") {
    TempDir dir;
    gateway::ResponseCache cache(dir.path);
    gateway::CollectOptions options;
    options.parallelism = 0;
    CHECK_THROWS_AS(gateway::collect_responses({}, {}, cache, options), ConfigError);
}

TEST_CASE("stub server refuses an already-bound port") {
    testing::StubServer first({});
    CHECK(first.port() > 0);
    CHECK_THROWS_AS(testing::StubServer({}, first.port()), std::runtime_error);
}
