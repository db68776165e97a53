#include "convoeval/corpus.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "convoeval/csv.hpp"
#include "convoeval/errors.hpp"
#include "convoeval/util.hpp"

namespace convoeval::corpus {

using nlohmann::json;

std::string clean_text(const std::string& text) {
    if (text.empty()) return {};

    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
        throw std::runtime_error("ICU NFC normalizer unavailable");
    }
    icu::UnicodeString source = icu::UnicodeString::fromUTF8(text);
    icu::UnicodeString normalized = nfc->normalize(source, status);
    if (U_FAILURE(status)) {
        throw std::runtime_error("NFC normalization failed");
    }

    // Single pass: drop non-whitespace controls, collapse whitespace, trim.
    icu::UnicodeString out;
    bool pending_space = false;
    for (int32_t i = 0; i < normalized.length();) {
        UChar32 cp = normalized.char32At(i);
        i += U16_LENGTH(cp);
        bool ws = u_isUWhiteSpace(cp) || cp == '\t' || cp == '\n' || cp == '\r' ||
                  cp == 0x0B || cp == 0x0C;
        if (ws) {
            pending_space = !out.isEmpty();
            continue;
        }
        if (u_charType(cp) == U_CONTROL_CHAR) continue;
        if (pending_space) {
            out.append(static_cast<UChar32>(' '));
            pending_space = false;
        }
        out.append(cp);
    }

    std::string result;
    out.toUTF8String(result);
    return result;
}

ColumnMap ColumnMap::from_json_string(const std::string& content) {
    json j;
    try {
        j = json::parse(content);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("column map is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("column map must be a JSON object");
    auto need = [&](const char* key) -> std::string {
        if (!j.contains(key) || !j[key].is_string() || j[key].get<std::string>().empty()) {
            throw ConfigError(std::string("column map missing field: ") + key);
        }
        return j[key].get<std::string>();
    };
    ColumnMap m;
    m.question_id = need("question_id");
    m.topic = need("topic");
    m.question_text = need("question_text");
    m.answer_text = need("answer_text");
    m.upvotes = need("upvotes");
    m.views = need("views");
    return m;
}

ColumnMap ColumnMap::from_file(const std::filesystem::path& path) {
    return from_json_string(util::read_file(path));
}

namespace {

// Non-negative integer; empty counts as 0, anything else is malformed.
bool parse_count(const std::string& s, std::uint64_t& out) {
    if (s.empty()) {
        out = 0;
        return true;
    }
    std::uint64_t value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    out = value;
    return true;
}

}  // namespace

ParseResult parse_dataset(const std::string& csv_text, const ColumnMap& map) {
    auto rows = csv::parse(csv_text);
    if (rows.empty()) throw ConfigError("dataset has no header row");

    const auto& header = rows.front();
    if (header.malformed) throw ConfigError("dataset header row is malformed");
    std::unordered_map<std::string, std::size_t> column_index;
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
        column_index.emplace(header.fields[i], i);
    }
    auto require_column = [&](const std::string& name) -> std::size_t {
        auto it = column_index.find(name);
        if (it == column_index.end()) {
            throw ConfigError("mapped column not in source header: " + name);
        }
        return it->second;
    };
    const std::size_t id_col = require_column(map.question_id);
    const std::size_t topic_col = require_column(map.topic);
    const std::size_t question_col = require_column(map.question_text);
    const std::size_t answer_col = require_column(map.answer_text);
    const std::size_t upvotes_col = require_column(map.upvotes);
    const std::size_t views_col = require_column(map.views);
    const std::size_t max_col = std::max({id_col, topic_col, question_col,
                                          answer_col, upvotes_col, views_col});

    ParseResult result;
    std::unordered_set<std::string> seen_topics;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        ++result.rows_read;
        if (row.malformed || row.fields.size() <= max_col) {
            ++result.skipped_malformed;
            continue;
        }
        RawRow raw;
        raw.question_id = clean_text(row.fields[id_col]);
        raw.topic = clean_text(row.fields[topic_col]);
        raw.question_text = clean_text(row.fields[question_col]);
        raw.answer_text = clean_text(row.fields[answer_col]);
        if (!parse_count(row.fields[upvotes_col], raw.upvotes) ||
            !parse_count(row.fields[views_col], raw.views)) {
            ++result.skipped_malformed;
            continue;
        }
        if (raw.question_id.empty() || raw.question_text.empty() || raw.answer_text.empty()) {
            ++result.skipped_empty;
            continue;
        }
        raw.source_index = result.rows.size();
        if (seen_topics.insert(raw.topic).second) result.topics.push_back(raw.topic);
        result.rows.push_back(std::move(raw));
    }
    return result;
}

QARecord select_gold(const std::vector<RawRow>& rows_for_one_question) {
    if (rows_for_one_question.empty()) {
        throw std::logic_error("select_gold requires at least one row");
    }
    const RawRow* best = &rows_for_one_question.front();
    for (const RawRow& row : rows_for_one_question) {
        if (row.question_id != best->question_id) {
            throw std::logic_error("select_gold rows must share question_id");
        }
        if (row.upvotes > best->upvotes ||
            (row.upvotes == best->upvotes && row.views > best->views) ||
            (row.upvotes == best->upvotes && row.views == best->views &&
             row.source_index < best->source_index)) {
            best = &row;
        }
    }
    return QARecord{best->question_id, best->topic, best->question_text,
                    best->answer_text, best->upvotes, best->views};
}

Corpus ingest(const std::string& csv_text, const ColumnMap& map) {
    Corpus corpus;
    corpus.stats = parse_dataset(csv_text, map);

    std::vector<std::string> order;
    std::unordered_map<std::string, std::vector<RawRow>> groups;
    for (const RawRow& row : corpus.stats.rows) {
        auto [it, inserted] = groups.try_emplace(row.question_id);
        if (inserted) order.push_back(row.question_id);
        it->second.push_back(row);
    }
    corpus.records.reserve(order.size());
    for (const std::string& id : order) {
        corpus.records.push_back(select_gold(groups[id]));
    }
    return corpus;
}

std::string to_jsonl(const std::vector<QARecord>& records) {
    std::string out;
    for (const QARecord& rec : records) {
        json j{{"question_id", rec.question_id},
               {"topic", rec.topic},
               {"question_text", rec.question_text},
               {"gold_response_text", rec.gold_response_text},
               {"upvotes", rec.upvotes},
               {"views", rec.views}};
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<QARecord> from_jsonl(const std::string& content) {
    std::vector<QARecord> records;
    std::unordered_set<std::string> ids;
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw IoError("corpus line " + std::to_string(line_no) + ": " + e.what());
        }
        QARecord rec;
        try {
            rec.question_id = j.at("question_id").get<std::string>();
            rec.topic = j.at("topic").get<std::string>();
            rec.question_text = j.at("question_text").get<std::string>();
            rec.gold_response_text = j.at("gold_response_text").get<std::string>();
            rec.upvotes = j.at("upvotes").get<std::uint64_t>();
            rec.views = j.at("views").get<std::uint64_t>();
        } catch (const json::exception& e) {
            throw IoError("corpus line " + std::to_string(line_no) + ": " + e.what());
        }
        if (rec.question_text.empty() || rec.gold_response_text.empty()) {
            throw IoError("corpus line " + std::to_string(line_no) + ": empty text field");
        }
        if (!ids.insert(rec.question_id).second) {
            throw IoError("corpus line " + std::to_string(line_no) + ": duplicate question_id " +
                          rec.question_id);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<QARecord> load_jsonl(const std::filesystem::path& path) {
    return from_jsonl(util::read_file(path));
}

void save_jsonl(const std::vector<QARecord>& records, const std::filesystem::path& path) {
    util::write_file_atomic(path, to_jsonl(records));
}

}  // namespace convoeval::corpus
