#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace convoeval::util {

/// SHA-256 of `data`, lowercase hex (64 chars).
std::string sha256_hex(const std::string& data);

struct ParsedUrl {
    std::string scheme;  // "http" or "https"
    std::string host;
    int port = 80;
    std::string path;  // leading '/', "/" when absent
};

/// Splits scheme://host[:port][/path]. Throws ConfigError on anything else.
ParsedUrl parse_url(const std::string& url);

/// Current wall-clock time as "YYYY-MM-DDTHH:MM:SSZ" (UTC).
std::string iso8601_now();

std::string read_file(const std::filesystem::path& path);

/// Write via temp file + rename so readers never observe partial content.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Fixed-point decimal with `digits` places ("%.*f").
std::string format_fixed(double value, int digits);

}  // namespace convoeval::util
