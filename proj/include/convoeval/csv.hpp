#pragma once

#include <string>
#include <vector>

namespace convoeval::csv {

struct Row {
    std::vector<std::string> fields;
    bool malformed = false;  // stray quote / unterminated quote; fields hold best effort
    std::size_t line = 0;    // 1-based line of the row start
};

/// RFC-4180 parse of a whole document: quoted fields, escaped quotes,
/// embedded separators and newlines, CRLF or LF line ends.
/// Blank lines are skipped. Malformed rows are returned flagged, not dropped.
std::vector<Row> parse(const std::string& text);

/// One encoded record, terminated with "\n". Fields containing
/// separator, quote or newline are quoted; quotes doubled.
std::string encode_row(const std::vector<std::string>& fields);

}  // namespace convoeval::csv
