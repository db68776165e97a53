#include "convoeval/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

#include "convoeval/errors.hpp"
#include "convoeval/util.hpp"

namespace convoeval::text {

namespace {

bool is_ascii_alnum(unsigned char c) { return std::isalnum(c) != 0; }

bool is_word_byte(unsigned char c) { return c >= 0x80 || is_ascii_alnum(c); }

char ascii_lower(unsigned char c) { return static_cast<char>(std::tolower(c)); }

// Abbreviations whose periods never terminate a sentence.
constexpr std::array<const char*, 8> kProtectedAbbreviations = {
    "dr.", "mr.", "mrs.", "ms.", "e.g.", "i.e.", "etc.", "vs.",
};

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// True when the '.' at `pos` sits inside an occurrence of a protected
// abbreviation (matched case-insensitively at a word boundary).
bool dot_is_protected(const std::string& text, std::size_t pos) {
    for (const char* abbr_cstr : kProtectedAbbreviations) {
        std::string abbr = abbr_cstr;
        // Which dot positions does the abbreviation contain?
        for (std::size_t d = 0; d < abbr.size(); ++d) {
            if (abbr[d] != '.') continue;
            if (pos < d) continue;
            std::size_t start = pos - d;
            if (start + abbr.size() > text.size()) continue;
            bool match = true;
            for (std::size_t k = 0; k < abbr.size(); ++k) {
                if (ascii_lower(static_cast<unsigned char>(text[start + k])) != abbr[k]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            // word boundary before the abbreviation
            if (start > 0 && is_word_byte(static_cast<unsigned char>(text[start - 1]))) continue;
            return true;
        }
    }
    return false;
}

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

}  // namespace

SentimentLexicon SentimentLexicon::from_string(const std::string& content) {
    SentimentLexicon lex;
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
            throw ConfigError("lexicon line " + std::to_string(line_no) + ": expected token<TAB>polarity");
        }
        std::string token = line.substr(first, tab - first);
        double value = 0.0;
        try {
            std::size_t consumed = 0;
            value = std::stod(line.substr(tab + 1), &consumed);
        } catch (const std::exception&) {
            throw ConfigError("lexicon line " + std::to_string(line_no) + ": bad polarity");
        }
        lex.add(std::move(token), value);
    }
    return lex;
}

SentimentLexicon SentimentLexicon::from_file(const std::filesystem::path& path) {
    return from_string(util::read_file(path));
}

void SentimentLexicon::add(std::string token, double polarity) {
    if (polarity < -1.0 || polarity > 1.0) {
        throw ConfigError("lexicon polarity out of [-1,1] for token: " + token);
    }
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char c) { return ascii_lower(c); });
    entries_[std::move(token)] = polarity;
}

std::vector<std::string> split_sentences(const std::string& text) {
    std::vector<std::string> sentences;
    const std::size_t n = text.size();
    std::size_t i = 0;

    auto push_trimmed = [&](std::size_t begin, std::size_t end) {
        while (begin < end && is_space(static_cast<unsigned char>(text[begin]))) ++begin;
        while (end > begin && is_space(static_cast<unsigned char>(text[end - 1]))) --end;
        if (end > begin) sentences.push_back(text.substr(begin, end - begin));
    };

    std::size_t start = 0;
    while (i < n) {
        char c = text[i];
        if (is_terminator(c)) {
            // absorb a run of terminators: "?!" ends one sentence
            std::size_t run_end = i;
            while (run_end + 1 < n && is_terminator(text[run_end + 1])) ++run_end;
            bool followed_by_break = run_end + 1 >= n ||
                                     is_space(static_cast<unsigned char>(text[run_end + 1]));
            bool protected_dot = (run_end == i && c == '.' && dot_is_protected(text, i));
            if (followed_by_break && !protected_dot) {
                push_trimmed(start, run_end + 1);
                start = run_end + 1;
            }
            i = run_end + 1;
        } else {
            ++i;
        }
    }
    push_trimmed(start, n);
    return sentences;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    const std::size_t n = text.size();
    for (std::size_t i = 0; i < n; ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word_byte(c)) {
            current.push_back(c >= 0x80 ? static_cast<char>(c) : ascii_lower(c));
        } else if (c == '\'' && !current.empty() && i + 1 < n &&
                   is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
            current.push_back('\'');
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

int count_syllables(const std::string& word) {
    auto is_vowel = [](char c) {
        c = ascii_lower(static_cast<unsigned char>(c));
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    };
    int groups = 0;
    bool in_group = false;
    for (char c : word) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    // silent trailing "e", except consonant + "le" ("table")
    std::size_t len = word.size();
    if (len >= 2 && ascii_lower(static_cast<unsigned char>(word[len - 1])) == 'e') {
        bool consonant_le = len >= 3 &&
                            ascii_lower(static_cast<unsigned char>(word[len - 2])) == 'l' &&
                            !is_vowel(word[len - 3]);
        if (!consonant_le) --groups;
    }
    return std::max(groups, 1);
}

double polarity(const std::string& text, const SentimentLexicon& lexicon) {
    double sum = 0.0;
    std::size_t matched = 0;
    for (const std::string& token : tokenize(text)) {
        auto it = lexicon.entries().find(token);
        if (it != lexicon.entries().end()) {
            sum += it->second;
            ++matched;
        }
    }
    return matched == 0 ? 0.0 : sum / static_cast<double>(matched);
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace convoeval::text
