#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "convoeval/emotion.hpp"
#include "convoeval/text.hpp"

namespace convoeval::metrics {

enum class MetricId {
    consistency,
    sentiment_change,
    intra_sentiment,
    simplicity,
    recycling,
    agreeability,
    active_listening,
    // auxiliary, not part of the seven-metric table
    simplicity_grade,
};

const char* metric_name(MetricId id);
std::optional<MetricId> metric_from_name(const std::string& name);

/// The seven table metrics, in column order.
inline constexpr MetricId kTableMetrics[] = {
    MetricId::consistency,     MetricId::sentiment_change, MetricId::intra_sentiment,
    MetricId::simplicity,      MetricId::recycling,        MetricId::agreeability,
    MetricId::active_listening,
};

struct MetricValue {
    MetricId id{};
    std::optional<double> value;  // empty <=> not applicable
    std::string reason;           // why not applicable, when it matters

    bool applicable() const { return value.has_value(); }
};

/// Lowercase structural stopwords excluded from recycling credit.
class FluffList {
public:
    /// One token per line, '#' comments allowed. The list must be non-empty.
    static FluffList from_string(const std::string& content);
    static FluffList from_file(const std::filesystem::path& path);
    static FluffList from_tokens(std::vector<std::string> tokens);

    bool contains(const std::string& token) const { return tokens_.count(token) > 0; }
    std::size_t size() const { return tokens_.size(); }

private:
    std::unordered_set<std::string> tokens_;
};

enum class RecyclingMode { multiset, set };

struct MetricConfig {
    double rbo_p = 0.9;
    int rbo_k = 10;
    double eps = 1e-6;
    RecyclingMode recycling_mode = RecyclingMode::multiset;
};

/// Extrapolated rank-biased overlap of two rankings of unique items,
/// evaluated to depth d = min(k, |a|, |b|):
///   (X_d / d) * p^d + ((1-p)/p) * sum_{i=1..d} (X_i / i) * p^i
/// where X_i is the size of the intersection of the two top-i prefixes.
/// Both rankings must be non-empty; p in (0,1); k >= 1.
double rbo_extrapolated(const std::vector<std::string>& a, const std::vector<std::string>& b,
                        double p, int k);

/// RBO over the two emotion rankings (weights matter only through the
/// order). Empty profiles make the metric inapplicable.
std::optional<double> emotion_consistency(const emotion::EmotionProfile& gs,
                                          const emotion::EmotionProfile& llm,
                                          double p = 0.9, int k = 10);

/// sigmoid of the question-anchored relative polarity change:
///   delta = (polarity(response) - polarity(question)) / (|polarity(question)| + eps)
double sentiment_change(const std::string& question, const std::string& response,
                        const text::SentimentLexicon& lexicon, double eps = 1e-6);

/// sigmoid of the least-squares slope of per-sentence polarities over the
/// sentence index; fewer than two sentences means zero slope, i.e. 0.5.
double intra_response_sentiment(const std::string& response,
                                const text::SentimentLexicon& lexicon);

struct SimplicityScore {
    double reading_ease = 0.0;  // 206.835 - 1.015*(W/S) - 84.6*(Sy/W), unclamped
    double grade = 0.0;         // 0.39*(W/S) + 11.8*(Sy/W) - 15.59
};

/// Flesch scores, or nothing when the response has fewer than 100
/// whitespace-delimited words.
std::optional<SimplicityScore> simplicity(const std::string& response);

/// Fraction of the response's non-fluff tokens that reuse the question's
/// unique tokens. Multiset mode counts repeated reuse; set mode counts each
/// distinct response token once. No non-fluff tokens -> 0.
double recycling(const std::string& question, const std::string& response,
                 const FluffList& fluff, RecyclingMode mode = RecyclingMode::multiset);

/// All five non-judge metrics for one (question, response) pair, plus the
/// auxiliary grade. Missing profiles make consistency inapplicable with the
/// given reason.
std::vector<MetricValue> score_pair(const std::string& question, const std::string& response,
                                    const std::optional<emotion::EmotionProfile>& gs_profile,
                                    const std::optional<emotion::EmotionProfile>& resp_profile,
                                    const text::SentimentLexicon& lexicon, const FluffList& fluff,
                                    const MetricConfig& config,
                                    const std::string& profile_failure_reason = {});

}  // namespace convoeval::metrics
