#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace convoeval::corpus {

/// One verified question with its selected gold-standard answer.
struct QARecord {
    std::string question_id;
    std::string topic;
    std::string question_text;
    std::string gold_response_text;
    std::uint64_t upvotes = 0;
    std::uint64_t views = 0;

    bool operator==(const QARecord&) const = default;
};

/// Canonical field -> source column name. All six fields must be mapped.
struct ColumnMap {
    std::string question_id;
    std::string topic;
    std::string question_text;
    std::string answer_text;
    std::string upvotes;
    std::string views;

    /// {"question_id": "questionID", ...}; missing keys raise ConfigError.
    static ColumnMap from_json_string(const std::string& content);
    static ColumnMap from_file(const std::filesystem::path& path);
};

/// One answer row as read from the source, before gold selection.
struct RawRow {
    std::string question_id;
    std::string topic;
    std::string question_text;
    std::string answer_text;
    std::uint64_t upvotes = 0;
    std::uint64_t views = 0;
    std::size_t source_index = 0;  // order of appearance, tie-break of last resort
};

struct ParseResult {
    std::vector<RawRow> rows;
    std::size_t rows_read = 0;
    std::size_t skipped_malformed = 0;  // structural CSV damage, bad numerics
    std::size_t skipped_empty = 0;      // question or answer cleans to empty
    std::vector<std::string> topics;    // distinct, in order of first appearance
};

/// NFC-normalize, strip non-whitespace control characters, collapse
/// whitespace runs to single spaces, trim. Idempotent.
std::string clean_text(const std::string& text);

/// Reads a headered RFC-4180 CSV through `map`. Rows that cannot be used are
/// counted per reason and skipped; nothing is dropped silently.
ParseResult parse_dataset(const std::string& csv_text, const ColumnMap& map);

/// The most popular row: max upvotes, ties by max views, then earliest
/// source order. Precondition: all rows share question_id, at least one row.
QARecord select_gold(const std::vector<RawRow>& rows_for_one_question);

/// Full ingestion: parse, group by question_id (first-seen order), select
/// gold per group.
struct Corpus {
    std::vector<QARecord> records;
    ParseResult stats;
};
Corpus ingest(const std::string& csv_text, const ColumnMap& map);

/// One JSON object per line with exactly the QARecord fields, sorted keys.
std::string to_jsonl(const std::vector<QARecord>& records);
std::vector<QARecord> from_jsonl(const std::string& content);

std::vector<QARecord> load_jsonl(const std::filesystem::path& path);
void save_jsonl(const std::vector<QARecord>& records, const std::filesystem::path& path);

}  // namespace convoeval::corpus
