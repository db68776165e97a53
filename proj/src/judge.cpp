#include "convoeval/judge.hpp"

#include <cctype>

#include "convoeval/errors.hpp"

namespace convoeval::judge {

const std::string& default_system_message() {
    static const std::string text =
        "Respond to the prompt exactly and provide strictly a number. With no clarification.";
    return text;
}

const std::string& default_agreeability_prompt() {
    static const std::string text =
        "From 0, which indicates strong disagreement, to 10, which indicates strong agreement, "
        "give a rating for the level of agreement provided by the second text for the first "
        "text. I want to define agreement as support and agreement presented in the message. "
        "This will be witnessed through linguistic choices. You may base the rating off the "
        "general message present in each and key phrases and words indicating agreement or "
        "disagreement.";
    return text;
}

const std::string& default_active_listening_prompt() {
    static const std::string text =
        "From 0 which indicates weak active listening, to 10, which indicates strong active "
        "listening, give a rating for the level of active listening between the following two "
        "pieces of text. Active listening involves how the second text captures the central "
        "message, topic, and reasoning discussed within the first text. Say for example, the "
        "first text says I suffer from depression, abuse, and divorce, and the second text says "
        "it can be challenging to suffer from multiple issues at the same time. This would "
        "constitute high active listening because while the words of the first text aren't "
        "repeated in the second, the central message is repeated. If in response to the first "
        "text, the second text just said I agree, that would be a low active listening score "
        "since it doesn't capture the content or reasoning of the first text. What matters is "
        "just whether the central messaging, topic, and reasoning is discussed in the second "
        "text.";
    return text;
}

std::optional<int> extract_score(const std::string& judge_output) {
    std::size_t i = 0;
    const std::size_t n = judge_output.size();
    while (i < n && !std::isdigit(static_cast<unsigned char>(judge_output[i]))) ++i;
    if (i == n) return std::nullopt;

    std::size_t end = i;
    while (end < n && std::isdigit(static_cast<unsigned char>(judge_output[end]))) ++end;
    while (i < end - 1 && judge_output[i] == '0') ++i;  // leading zeros
    if (end - i > 2) return std::nullopt;               // certainly > 10
    int value = std::stoi(judge_output.substr(i, end - i));
    if (value > 10) return std::nullopt;
    return value;
}

std::string judge_user_message(const std::string& prompt, const std::string& question,
                               const std::string& response) {
    return prompt + "\n\nTEXT 1: " + question + "\n\nTEXT 2: " + response;
}

namespace {

JudgeResult rate(const std::string& prompt, const std::string& question,
                 const std::string& response, const JudgeConfig& config,
                 gateway::ResponseCache& cache) {
    if (config.max_parse_retries < 1) throw ConfigError("max_parse_retries must be >= 1");
    gateway::ModelSpec spec = config.model;
    spec.temperature = 0.0;  // determinism contract for judge calls

    const std::string user = judge_user_message(prompt, question, response);
    const std::string key = gateway::cache_key(spec, config.system_message, user);

    JudgeResult result;
    std::string last_failure;
    for (int attempt = 0; attempt < config.max_parse_retries; ++attempt) {
        gateway::Completion completion;
        bool from_cache = false;
        try {
            if (attempt == 0) {
                auto cached = gateway::cached_complete(spec, config.system_message, user, cache,
                                                       config.retry);
                completion = std::move(cached.completion);
                from_cache = cached.cache_hit;
            } else {
                // a cached reply already failed to parse; go back to the model
                completion = gateway::complete(spec, config.system_message, user, config.retry);
            }
        } catch (const std::exception& e) {
            result.reason = e.what();
            result.retry_count = attempt;
            return result;
        }

        auto score = extract_score(completion.text);
        if (score) {
            if (attempt > 0) {
                // keep the parseable reply so warm re-runs stay deterministic
                cache.put(key, spec, config.system_message, user, completion);
            }
            result.score = score;
            result.retry_count = attempt;
            result.cache_hit = from_cache;
            return result;
        }
        last_failure = "unparseable judge output: " + completion.text.substr(0, 80);
    }
    result.reason = last_failure.empty() ? "judge produced no output" : last_failure;
    result.retry_count = config.max_parse_retries;
    return result;
}

}  // namespace

JudgeResult agreeability(const std::string& question, const std::string& response,
                         const JudgeConfig& config, gateway::ResponseCache& cache) {
    return rate(config.agreeability_prompt, question, response, config, cache);
}

JudgeResult active_listening(const std::string& question, const std::string& response,
                             const JudgeConfig& config, gateway::ResponseCache& cache) {
    return rate(config.active_listening_prompt, question, response, config, cache);
}

}  // namespace convoeval::judge
