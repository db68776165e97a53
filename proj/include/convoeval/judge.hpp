#pragma once

#include <optional>
#include <string>

#include "convoeval/gateway.hpp"

namespace convoeval::judge {

/// Default prompt assets. Editable copies ship under data/prompts/.
const std::string& default_system_message();
const std::string& default_agreeability_prompt();
const std::string& default_active_listening_prompt();

struct JudgeConfig {
    gateway::ModelSpec model;  // judged at temperature 0
    int max_parse_retries = 3;
    std::string system_message = default_system_message();
    std::string agreeability_prompt = default_agreeability_prompt();
    std::string active_listening_prompt = default_active_listening_prompt();
    gateway::RetryPolicy retry;
};

/// First maximal digit run in the text, accepted iff it parses into [0, 10].
std::optional<int> extract_score(const std::string& judge_output);

/// The single user turn sent to the judge: task prompt, then the two texts
/// behind labeled delimiters.
std::string judge_user_message(const std::string& prompt, const std::string& question,
                               const std::string& response);

struct JudgeResult {
    std::optional<int> score;  // empty: not applicable
    std::string reason;        // why, when score is empty
    int retry_count = 0;       // parse retries that were needed
    bool cache_hit = false;
};

/// 0-10 agreement expressed by the response toward the question.
JudgeResult agreeability(const std::string& question, const std::string& response,
                         const JudgeConfig& config, gateway::ResponseCache& cache);

/// 0-10 reflection of the question's content and reasoning.
JudgeResult active_listening(const std::string& question, const std::string& response,
                             const JudgeConfig& config, gateway::ResponseCache& cache);

}  // namespace convoeval::judge
