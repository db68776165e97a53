#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace convoeval::text {

/// Token -> polarity in [-1, +1]. Keys are lowercase.
class SentimentLexicon {
public:
    SentimentLexicon() = default;

    /// Parses "token<TAB>polarity" lines; '#' starts a comment line.
    /// Out-of-range polarities and garbage lines raise ConfigError.
    static SentimentLexicon from_string(const std::string& content);
    static SentimentLexicon from_file(const std::filesystem::path& path);

    void add(std::string token, double polarity);

    const std::unordered_map<std::string, double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, double> entries_;
};

/// Splits on sentence terminators (. ! ?) followed by whitespace or end of
/// text. A protected abbreviation (Dr., Mr., Mrs., Ms., e.g., i.e., etc., vs.)
/// never ends a sentence. Text without a terminator comes back as one
/// sentence; empty text as none. Sentences keep their terminators; joining
/// them with single spaces preserves every non-whitespace character.
std::vector<std::string> split_sentences(const std::string& text);

/// Lowercased word tokens: splits on anything that is not alphanumeric,
/// keeping apostrophes with alphanumerics on both sides ("i'm") and treating
/// non-ASCII bytes as word characters. Digits are kept.
std::vector<std::string> tokenize(const std::string& text);

/// Heuristic syllable count: vowel groups (a e i o u y), minus one for a
/// silent trailing "e" (kept when the word ends in consonant + "le"),
/// never below 1.
int count_syllables(const std::string& word);

/// Mean lexicon polarity over matched tokens; 0.0 when nothing matches.
double polarity(const std::string& text, const SentimentLexicon& lexicon);

/// Logistic function 1 / (1 + e^-x).
double sigmoid(double x);

}  // namespace convoeval::text
