#include "convoeval/util.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "convoeval/errors.hpp"

namespace convoeval::util {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 digest failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

ParsedUrl parse_url(const std::string& url) {
    ParsedUrl p;
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("invalid endpoint url (missing scheme): " + url);
    }
    p.scheme = url.substr(0, scheme_end);
    if (p.scheme != "http" && p.scheme != "https") {
        throw ConfigError("unsupported url scheme: " + p.scheme);
    }
    p.port = p.scheme == "https" ? 443 : 80;
    std::string rest = url.substr(scheme_end + 3);
    auto path_start = rest.find('/');
    std::string authority = path_start == std::string::npos ? rest : rest.substr(0, path_start);
    p.path = path_start == std::string::npos ? "/" : rest.substr(path_start);
    auto colon = authority.find(':');
    if (colon == std::string::npos) {
        p.host = authority;
    } else {
        p.host = authority.substr(0, colon);
        try {
            p.port = std::stoi(authority.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("invalid port in url: " + url);
        }
    }
    if (p.host.empty()) {
        throw ConfigError("invalid endpoint url (empty host): " + url);
    }
    return p;
}

std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed: " + path.string());
    }
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open file for writing: " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        throw IoError("rename failed: " + tmp.string() + " -> " + path.string());
    }
}

std::string format_fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

}  // namespace convoeval::util
