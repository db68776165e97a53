#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "convoeval/stats.hpp"

namespace convoeval::report {

enum class Format { json, csv, all };
Format format_from_name(const std::string& name);  // unknown -> ConfigError

/// Reproducibility record written next to the final artifacts. The manifest
/// is the only emitted file carrying a timestamp.
struct RunManifest {
    std::string config_digest;  // sha256 of the canonical effective config
    std::string corpus_digest;  // sha256 of the canonical corpus bytes
    std::vector<std::string> models;
    std::uint64_t cache_hits = 0;
    std::uint64_t cache_misses = 0;
    std::map<std::string, std::uint64_t> skipped;  // reason -> count
    std::string tool_version;
    std::string created_at;

    std::string to_json() const;
};

/// Published-table-shaped CSV: models as rows (GS first), the seven metric
/// columns, 6-decimal fixed formatting.
void emit_metric_table(const stats::MetricTable& table, const std::filesystem::path& path);

/// The analysis artifacts for `format`:
///   analysis.json           full report
///   correlation.csv         model, r, p, significant, euclidean_distance
///   topics_r.csv/topics_p.csv   per-topic correlation tables
///   zscores.json            heatmap grid {models, topic_pairs, z}
/// Written under `dir`; returns the emitted paths in order.
std::vector<std::filesystem::path> emit_analysis(const stats::AnalysisReport& report,
                                                 const std::filesystem::path& dir, Format format);

void emit_manifest(const RunManifest& manifest, const std::filesystem::path& path);

}  // namespace convoeval::report
