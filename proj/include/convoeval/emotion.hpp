#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace convoeval::emotion {

/// Ranked, weighted emotion labels: weights sum to 1, descending by weight
/// with a lexicographic tie-break on the label, labels unique.
class EmotionProfile {
public:
    EmotionProfile() = default;

    /// Normalizes raw (label, score) pairs into a valid profile: duplicate
    /// labels are summed, weights rescaled to sum 1, order enforced.
    /// Negative scores or an all-zero/empty input raise ClassificationError.
    static EmotionProfile from_scores(std::vector<std::pair<std::string, double>> scores);

    /// Top-k prefix, re-normalized to sum 1. k >= 1.
    EmotionProfile truncated(std::size_t k) const;

    const std::vector<std::pair<std::string, double>>& labels() const { return labels_; }
    std::vector<std::string> ranking() const;
    bool empty() const { return labels_.empty(); }
    std::size_t size() const { return labels_.size(); }

private:
    std::vector<std::pair<std::string, double>> labels_;
};

class Classifier {
public:
    virtual ~Classifier() = default;
    virtual EmotionProfile classify(const std::string& text) const = 0;
};

/// Offline fallback: counts word -> emotion hits and normalizes the counts.
/// No hit (including empty text) yields [("neutral", 1.0)].
class LexiconClassifier : public Classifier {
public:
    /// Parses "token<TAB>emotion" lines; '#' starts a comment line.
    static LexiconClassifier from_string(const std::string& content);
    static LexiconClassifier from_file(const std::filesystem::path& path);

    void add(std::string token, std::string label);

    EmotionProfile classify(const std::string& text) const override;

private:
    std::unordered_map<std::string, std::string> word_to_emotion_;
};

/// Remote classifier endpoint: POST {"text": ...} ->
/// {"labels": [{"label": str, "score": real}, ...]}. The reply is
/// re-normalized and re-sorted locally. Transport or protocol failure
/// raises ClassificationError.
class RemoteClassifier : public Classifier {
public:
    RemoteClassifier(std::string endpoint_url, double timeout_seconds = 30.0);

    EmotionProfile classify(const std::string& text) const override;

private:
    std::string endpoint_url_;
    double timeout_seconds_;
};

}  // namespace convoeval::emotion
