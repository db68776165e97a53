#include "convoeval/report.hpp"

#include <json.hpp>

#include "convoeval/csv.hpp"
#include "convoeval/errors.hpp"
#include "convoeval/util.hpp"

namespace convoeval::report {

using nlohmann::json;

Format format_from_name(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "all") return Format::all;
    throw ConfigError("unknown report format: " + name);
}

std::string RunManifest::to_json() const {
    json j{{"config_digest", config_digest},
           {"corpus_digest", corpus_digest},
           {"models", models},
           {"cache", {{"hits", cache_hits}, {"misses", cache_misses}}},
           {"skipped", skipped},
           {"tool_version", tool_version},
           {"created_at", created_at}};
    return j.dump(2) + "\n";
}

void emit_metric_table(const stats::MetricTable& table, const std::filesystem::path& path) {
    util::write_file_atomic(path, table.to_csv());
}

namespace {

std::string correlation_csv(const stats::AnalysisReport& report) {
    std::string out =
        csv::encode_row({"model", "pearson_r", "p_value", "significant", "euclidean_distance"});
    for (const auto& m : report.models) {
        std::vector<std::string> fields{m.model};
        if (m.overall) {
            fields.push_back(util::format_fixed(m.overall->r, 6));
            fields.push_back(util::format_fixed(m.overall->p, 6));
            fields.push_back(m.overall->significant ? "true" : "false");
        } else {
            fields.insert(fields.end(), {"", "", ""});
        }
        fields.push_back(m.euclidean_distance ? util::format_fixed(*m.euclidean_distance, 6)
                                              : "");
        out += csv::encode_row(fields);
    }
    return out;
}

std::string topic_csv(const stats::AnalysisReport& report, bool p_values) {
    std::vector<std::string> header{"model"};
    header.insert(header.end(), report.topics.begin(), report.topics.end());
    std::string out = csv::encode_row(header);
    for (const auto& m : report.models) {
        std::vector<std::string> fields{m.model};
        for (const std::string& topic : report.topics) {
            auto it = m.by_topic.find(topic);
            if (it == m.by_topic.end()) {
                fields.emplace_back();
            } else {
                fields.push_back(util::format_fixed(p_values ? it->second.p : it->second.r, 6));
            }
        }
        out += csv::encode_row(fields);
    }
    return out;
}

std::string zscore_grid_json(const stats::AnalysisReport& report) {
    std::vector<std::string> models;
    for (const auto& m : report.models) models.push_back(m.model);

    std::vector<std::string> pairs;
    for (std::size_t i = 0; i < report.topics.size(); ++i) {
        for (std::size_t j = i + 1; j < report.topics.size(); ++j) {
            pairs.push_back(report.topics[i] + " vs " + report.topics[j]);
        }
    }
    // one row per model, one column per topic pair
    json z = json::array();
    for (const auto& m : report.models) {
        json row = json::array();
        auto it = report.topic_z.find(m.model);
        for (std::size_t i = 0; i < report.topics.size(); ++i) {
            for (std::size_t j = i + 1; j < report.topics.size(); ++j) {
                row.push_back(it == report.topic_z.end() ? 0.0 : it->second[i][j]);
            }
        }
        z.push_back(std::move(row));
    }
    json grid{{"models", models}, {"topic_pairs", pairs}, {"z", std::move(z)}};
    return grid.dump(2) + "\n";
}

}  // namespace

std::vector<std::filesystem::path> emit_analysis(const stats::AnalysisReport& report,
                                                 const std::filesystem::path& dir, Format format) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec && !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory: " + dir.string());
    }
    std::vector<std::filesystem::path> written;
    bool want_json = format == Format::json || format == Format::all;
    bool want_csv = format == Format::csv || format == Format::all;

    if (want_json) {
        auto path = dir / "analysis.json";
        util::write_file_atomic(path, report.to_json());
        written.push_back(path);
    }
    if (want_csv) {
        auto path = dir / "correlation.csv";
        util::write_file_atomic(path, correlation_csv(report));
        written.push_back(path);
    }
    if (!report.topics.empty() && want_csv) {
        auto r_path = dir / "topics_r.csv";
        util::write_file_atomic(r_path, topic_csv(report, false));
        written.push_back(r_path);
        auto p_path = dir / "topics_p.csv";
        util::write_file_atomic(p_path, topic_csv(report, true));
        written.push_back(p_path);
    }
    // the z grid only exists with two or more topics
    if (report.topics.size() >= 2 && want_json) {
        auto path = dir / "zscores.json";
        util::write_file_atomic(path, zscore_grid_json(report));
        written.push_back(path);
    }
    return written;
}

void emit_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
    util::write_file_atomic(path, manifest.to_json());
}

}  // namespace convoeval::report
