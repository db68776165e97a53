#include "convoeval/csv.hpp"

namespace convoeval::csv {

std::vector<Row> parse(const std::string& text) {
    std::vector<Row> rows;
    std::size_t i = 0;
    std::size_t line = 1;
    const std::size_t n = text.size();

    while (i < n) {
        // skip blank lines between records
        if (text[i] == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') {
            ++line;
            i += 2;
            continue;
        }

        Row row;
        row.line = line;
        std::string field;
        bool in_quotes = false;
        bool row_done = false;

        while (i < n && !row_done) {
            char c = text[i];
            if (in_quotes) {
                if (c == '"') {
                    if (i + 1 < n && text[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                    } else {
                        in_quotes = false;
                        ++i;
                        // next char must be separator or end of record
                        if (i < n && text[i] != ',' && text[i] != '\n' &&
                            !(text[i] == '\r' && i + 1 < n && text[i + 1] == '\n')) {
                            row.malformed = true;
                        }
                    }
                } else {
                    if (c == '\n') ++line;
                    field.push_back(c);
                    ++i;
                }
            } else {
                switch (c) {
                    case '"':
                        if (field.empty()) {
                            in_quotes = true;
                        } else {
                            row.malformed = true;  // quote inside unquoted field
                            field.push_back(c);
                        }
                        ++i;
                        break;
                    case ',':
                        row.fields.push_back(std::move(field));
                        field.clear();
                        ++i;
                        break;
                    case '\r':
                        if (i + 1 < n && text[i + 1] == '\n') {
                            i += 2;
                            ++line;
                            row_done = true;
                        } else {
                            field.push_back(c);
                            ++i;
                        }
                        break;
                    case '\n':
                        ++i;
                        ++line;
                        row_done = true;
                        break;
                    default:
                        field.push_back(c);
                        ++i;
                }
            }
        }
        if (in_quotes) row.malformed = true;  // EOF inside quotes
        row.fields.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string encode_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        const std::string& f = fields[i];
        bool needs_quotes = f.find_first_of(",\"\r\n") != std::string::npos;
        if (needs_quotes) {
            out.push_back('"');
            for (char c : f) {
                if (c == '"') out.push_back('"');
                out.push_back(c);
            }
            out.push_back('"');
        } else {
            out += f;
        }
    }
    out.push_back('\n');
    return out;
}

}  // namespace convoeval::csv
