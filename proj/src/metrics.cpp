#include "convoeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "convoeval/errors.hpp"
#include "convoeval/util.hpp"

namespace convoeval::metrics {

const char* metric_name(MetricId id) {
    switch (id) {
        case MetricId::consistency: return "consistency";
        case MetricId::sentiment_change: return "sentiment_change";
        case MetricId::intra_sentiment: return "intra_sentiment";
        case MetricId::simplicity: return "simplicity";
        case MetricId::recycling: return "recycling";
        case MetricId::agreeability: return "agreeability";
        case MetricId::active_listening: return "active_listening";
        case MetricId::simplicity_grade: return "simplicity_grade";
    }
    return "?";
}

std::optional<MetricId> metric_from_name(const std::string& name) {
    for (MetricId id : {MetricId::consistency, MetricId::sentiment_change,
                        MetricId::intra_sentiment, MetricId::simplicity, MetricId::recycling,
                        MetricId::agreeability, MetricId::active_listening,
                        MetricId::simplicity_grade}) {
        if (name == metric_name(id)) return id;
    }
    return std::nullopt;
}

FluffList FluffList::from_string(const std::string& content) {
    std::vector<std::string> tokens;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t last = line.find_last_not_of(" \t");
        tokens.push_back(line.substr(first, last - first + 1));
    }
    return from_tokens(std::move(tokens));
}

FluffList FluffList::from_file(const std::filesystem::path& path) {
    return from_string(util::read_file(path));
}

FluffList FluffList::from_tokens(std::vector<std::string> tokens) {
    FluffList list;
    for (std::string& token : tokens) {
        std::transform(token.begin(), token.end(), token.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (!token.empty()) list.tokens_.insert(std::move(token));
    }
    if (list.tokens_.empty()) throw ConfigError("fluff list is empty");
    return list;
}

double rbo_extrapolated(const std::vector<std::string>& a, const std::vector<std::string>& b,
                        double p, int k) {
    if (a.empty() || b.empty()) throw std::logic_error("rbo rankings must be non-empty");
    if (p <= 0.0 || p >= 1.0) throw ConfigError("rbo persistence p must be in (0,1)");
    if (k < 1) throw ConfigError("rbo depth k must be >= 1");

    const std::size_t d =
        std::min({static_cast<std::size_t>(k), a.size(), b.size()});

    // X_i built incrementally; items within one ranking are unique, so the
    // intersection size grows by matches against the other prefix.
    std::unordered_set<std::string> seen_a, seen_b;
    std::size_t overlap = 0;
    double weighted_sum = 0.0;
    double p_i = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
        const std::string& ea = a[i];
        const std::string& eb = b[i];
        if (ea == eb) {
            ++overlap;
        } else {
            if (seen_b.count(ea)) ++overlap;
            if (seen_a.count(eb)) ++overlap;
        }
        seen_a.insert(ea);
        seen_b.insert(eb);
        p_i *= p;
        weighted_sum += (static_cast<double>(overlap) / static_cast<double>(i + 1)) * p_i;
    }
    const double x_d = static_cast<double>(overlap);
    const double dd = static_cast<double>(d);
    return (x_d / dd) * p_i + ((1.0 - p) / p) * weighted_sum;
}

std::optional<double> emotion_consistency(const emotion::EmotionProfile& gs,
                                          const emotion::EmotionProfile& llm, double p, int k) {
    if (gs.empty() || llm.empty()) return std::nullopt;
    return rbo_extrapolated(gs.ranking(), llm.ranking(), p, k);
}

double sentiment_change(const std::string& question, const std::string& response,
                        const text::SentimentLexicon& lexicon, double eps) {
    double q = text::polarity(question, lexicon);
    double r = text::polarity(response, lexicon);
    double delta = (r - q) / (std::fabs(q) + eps);
    return text::sigmoid(delta);
}

double intra_response_sentiment(const std::string& response,
                                const text::SentimentLexicon& lexicon) {
    auto sentences = text::split_sentences(response);
    const std::size_t n = sentences.size();
    if (n <= 1) return 0.5;

    // OLS slope with x = 0..n-1
    double mean_x = (static_cast<double>(n) - 1.0) / 2.0;
    double mean_y = 0.0;
    std::vector<double> ys;
    ys.reserve(n);
    for (const std::string& s : sentences) {
        ys.push_back(text::polarity(s, lexicon));
        mean_y += ys.back();
    }
    mean_y /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = static_cast<double>(i) - mean_x;
        num += dx * (ys[i] - mean_y);
        den += dx * dx;
    }
    return text::sigmoid(num / den);
}

namespace {

std::vector<std::string> whitespace_words(const std::string& s) {
    std::vector<std::string> words;
    std::istringstream in(s);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

}  // namespace

std::optional<SimplicityScore> simplicity(const std::string& response) {
    auto words = whitespace_words(response);
    if (words.size() < 100) return std::nullopt;

    std::size_t syllables = 0;
    for (const std::string& w : words) {
        syllables += static_cast<std::size_t>(text::count_syllables(w));
    }
    std::size_t sentence_count = std::max<std::size_t>(text::split_sentences(response).size(), 1);

    double words_per_sentence =
        static_cast<double>(words.size()) / static_cast<double>(sentence_count);
    double syllables_per_word =
        static_cast<double>(syllables) / static_cast<double>(words.size());

    SimplicityScore score;
    score.reading_ease = 206.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word;
    score.grade = 0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59;
    return score;
}

double recycling(const std::string& question, const std::string& response,
                 const FluffList& fluff, RecyclingMode mode) {
    std::unordered_set<std::string> question_tokens;
    for (const std::string& t : text::tokenize(question)) question_tokens.insert(t);

    std::vector<std::string> response_tokens;
    for (std::string& t : text::tokenize(response)) {
        if (!fluff.contains(t)) response_tokens.push_back(std::move(t));
    }
    if (mode == RecyclingMode::set) {
        std::unordered_set<std::string> unique(response_tokens.begin(), response_tokens.end());
        response_tokens.assign(unique.begin(), unique.end());
    }
    if (response_tokens.empty()) return 0.0;

    std::size_t recycled = 0;
    for (const std::string& t : response_tokens) {
        if (question_tokens.count(t)) ++recycled;
    }
    return static_cast<double>(recycled) / static_cast<double>(response_tokens.size());
}

std::vector<MetricValue> score_pair(const std::string& question, const std::string& response,
                                    const std::optional<emotion::EmotionProfile>& gs_profile,
                                    const std::optional<emotion::EmotionProfile>& resp_profile,
                                    const text::SentimentLexicon& lexicon, const FluffList& fluff,
                                    const MetricConfig& config,
                                    const std::string& profile_failure_reason) {
    std::vector<MetricValue> out;

    MetricValue consistency{MetricId::consistency, std::nullopt, {}};
    if (gs_profile.has_value() && resp_profile.has_value()) {
        auto value = emotion_consistency(*gs_profile, *resp_profile, config.rbo_p, config.rbo_k);
        if (value.has_value()) {
            consistency.value = value;
        } else {
            consistency.reason = "empty emotion profile";
        }
    } else {
        consistency.reason =
            profile_failure_reason.empty() ? "emotion profile unavailable" : profile_failure_reason;
    }
    out.push_back(std::move(consistency));

    out.push_back({MetricId::sentiment_change,
                   sentiment_change(question, response, lexicon, config.eps),
                   {}});
    out.push_back({MetricId::intra_sentiment, intra_response_sentiment(response, lexicon), {}});

    auto simple = simplicity(response);
    if (simple.has_value()) {
        out.push_back({MetricId::simplicity, simple->reading_ease, {}});
        out.push_back({MetricId::simplicity_grade, simple->grade, {}});
    } else {
        out.push_back({MetricId::simplicity, std::nullopt, "under 100 words"});
        out.push_back({MetricId::simplicity_grade, std::nullopt, "under 100 words"});
    }

    out.push_back({MetricId::recycling,
                   recycling(question, response, fluff, config.recycling_mode),
                   {}});
    return out;
}

}  // namespace convoeval::metrics
