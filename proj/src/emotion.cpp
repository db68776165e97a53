#include "convoeval/emotion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "convoeval/errors.hpp"
#include "convoeval/text.hpp"
#include "convoeval/util.hpp"

namespace convoeval::emotion {

using nlohmann::json;

EmotionProfile EmotionProfile::from_scores(std::vector<std::pair<std::string, double>> scores) {
    std::map<std::string, double> merged;
    for (auto& [label, score] : scores) {
        if (label.empty()) throw ClassificationError("empty emotion label");
        if (score < 0.0) throw ClassificationError("negative emotion score for " + label);
        merged[label] += score;
    }
    double total = 0.0;
    for (const auto& [label, score] : merged) total += score;
    if (merged.empty() || total <= 0.0) {
        throw ClassificationError("emotion scores are empty or sum to zero");
    }

    EmotionProfile profile;
    profile.labels_.assign(merged.begin(), merged.end());
    for (auto& [label, weight] : profile.labels_) weight /= total;
    std::stable_sort(profile.labels_.begin(), profile.labels_.end(),
                     [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first < b.first;
                     });
    return profile;
}

EmotionProfile EmotionProfile::truncated(std::size_t k) const {
    if (k == 0) throw std::logic_error("truncation depth must be >= 1");
    if (labels_.size() <= k) return *this;
    std::vector<std::pair<std::string, double>> head(labels_.begin(),
                                                     labels_.begin() + static_cast<long>(k));
    return from_scores(std::move(head));
}

std::vector<std::string> EmotionProfile::ranking() const {
    std::vector<std::string> out;
    out.reserve(labels_.size());
    for (const auto& [label, weight] : labels_) out.push_back(label);
    return out;
}

LexiconClassifier LexiconClassifier::from_string(const std::string& content) {
    LexiconClassifier c;
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t tab = line.find('\t', first);
        if (tab == std::string::npos) {
            throw ConfigError("emotion lexicon line " + std::to_string(line_no) +
                              ": expected token<TAB>emotion");
        }
        c.add(line.substr(first, tab - first), line.substr(tab + 1));
    }
    return c;
}

LexiconClassifier LexiconClassifier::from_file(const std::filesystem::path& path) {
    return from_string(util::read_file(path));
}

void LexiconClassifier::add(std::string token, std::string label) {
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (token.empty() || label.empty()) {
        throw ConfigError("emotion lexicon entries need token and label");
    }
    word_to_emotion_[std::move(token)] = std::move(label);
}

EmotionProfile LexiconClassifier::classify(const std::string& text) const {
    std::vector<std::pair<std::string, double>> counts;
    std::map<std::string, double> by_label;
    for (const std::string& token : text::tokenize(text)) {
        auto it = word_to_emotion_.find(token);
        if (it != word_to_emotion_.end()) by_label[it->second] += 1.0;
    }
    if (by_label.empty()) {
        return EmotionProfile::from_scores({{"neutral", 1.0}});
    }
    counts.assign(by_label.begin(), by_label.end());
    return EmotionProfile::from_scores(std::move(counts));
}

RemoteClassifier::RemoteClassifier(std::string endpoint_url, double timeout_seconds)
    : endpoint_url_(std::move(endpoint_url)), timeout_seconds_(timeout_seconds) {
    util::parse_url(endpoint_url_);  // validates eagerly
}

EmotionProfile RemoteClassifier::classify(const std::string& text) const {
    auto url = util::parse_url(endpoint_url_);
    httplib::Client client(url.host, url.port);
    client.set_connection_timeout(std::chrono::milliseconds(
        static_cast<long>(timeout_seconds_ * 1000)));
    client.set_read_timeout(std::chrono::milliseconds(
        static_cast<long>(timeout_seconds_ * 1000)));

    json body{{"text", text}};
    auto res = client.Post(url.path, body.dump(), "application/json");
    if (!res) {
        throw ClassificationError("emotion endpoint unreachable: " + endpoint_url_);
    }
    if (res->status != 200) {
        throw ClassificationError("emotion endpoint returned status " +
                                  std::to_string(res->status));
    }
    json reply;
    try {
        reply = json::parse(res->body);
    } catch (const json::parse_error& e) {
        throw ClassificationError(std::string("emotion reply is not JSON: ") + e.what());
    }
    if (!reply.contains("labels") || !reply["labels"].is_array()) {
        throw ClassificationError("emotion reply missing labels array");
    }
    std::vector<std::pair<std::string, double>> scores;
    for (const auto& item : reply["labels"]) {
        if (!item.contains("label") || !item.contains("score")) {
            throw ClassificationError("emotion label entry missing label/score");
        }
        scores.emplace_back(item["label"].get<std::string>(), item["score"].get<double>());
    }
    return EmotionProfile::from_scores(std::move(scores));
}

}  // namespace convoeval::emotion
