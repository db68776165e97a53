#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "convoeval/corpus.hpp"
#include "convoeval/emotion.hpp"
#include "convoeval/gateway.hpp"
#include "convoeval/judge.hpp"
#include "convoeval/metrics.hpp"
#include "convoeval/report.hpp"
#include "convoeval/stats.hpp"

namespace convoeval::pipeline {

struct EmotionConfig {
    std::string backend = "lexicon";  // "lexicon" or "remote"
    std::string endpoint_url;         // remote only
    std::optional<std::filesystem::path> lexicon_path;
    int top_k = 10;
};

struct CollectionConfig {
    int parallelism = 4;
    std::string system_message;  // collection sends bare questions
    gateway::RetryPolicy retry;
};

struct AnalysisConfig {
    bool topics = true;
    std::string method = "independent";
};

/// The single run configuration. Secrets never live here; model entries
/// name the environment variable that holds them.
struct RunConfig {
    std::filesystem::path corpus_path;
    std::filesystem::path cache_dir = "cache";
    std::filesystem::path output_dir = "out";
    std::optional<std::filesystem::path> column_map_path;

    std::vector<gateway::ModelSpec> models;
    judge::JudgeConfig judge;
    bool judge_configured = false;

    metrics::MetricConfig metric;
    std::optional<std::filesystem::path> fluff_path;
    std::optional<std::filesystem::path> lexicon_path;

    EmotionConfig emotion;
    CollectionConfig collection;
    AnalysisConfig analysis;

    /// Parses and validates; referenced files must exist. The canonical
    /// serialization (sorted keys, compact) feeds the manifest digest.
    static RunConfig from_file(const std::filesystem::path& path);
    static RunConfig from_json_string(const std::string& content,
                                      const std::filesystem::path& base_dir = ".");
    std::string canonical_json() const;

    /// Loaded assets with built-in defaults when paths are absent.
    text::SentimentLexicon load_lexicon() const;
    metrics::FluffList load_fluff() const;
    std::unique_ptr<emotion::Classifier> make_classifier() const;
};

/// Built-in default assets (shipped under data/ as editable copies).
const std::string& default_fluff_words();
const std::string& default_sentiment_lexicon();
const std::string& default_emotion_lexicon();

struct IngestSummary {
    std::size_t rows_read = 0;
    std::size_t records = 0;
    std::size_t skipped_malformed = 0;
    std::size_t skipped_empty = 0;
    std::size_t topic_count = 0;

    std::string to_json() const;
};

IngestSummary run_ingest(const std::filesystem::path& input_csv,
                         const std::filesystem::path& column_map,
                         const std::filesystem::path& out_corpus);

struct CollectSummary {
    std::size_t pairs_attempted = 0;
    std::size_t pairs_ok = 0;
    std::size_t pairs_failed = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t cache_misses = 0;

    std::string to_json() const;
};

CollectSummary run_collect(const std::filesystem::path& corpus_path,
                           const std::vector<gateway::ModelSpec>& models,
                           const std::filesystem::path& cache_dir,
                           const std::filesystem::path& out_responses,
                           const CollectionConfig& options);

struct ScoreSummary {
    std::size_t questions = 0;
    std::size_t rows = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t cache_misses = 0;
    std::map<std::string, std::uint64_t> unscored;  // reason -> count

    std::string to_json() const;
};

/// Scores the gold answer and every collected model response, writes the
/// long-format scores CSV and the per-model mean table.
ScoreSummary run_score(const std::filesystem::path& corpus_path,
                       const std::filesystem::path& responses_path, const RunConfig& config,
                       const std::filesystem::path& out_scores,
                       const std::filesystem::path& out_mean_table);

/// Long scores CSV -> per-model mean tables (overall and per topic).
struct AggregatedTables {
    stats::MetricTable overall;
    std::map<std::string, stats::MetricTable> by_topic;
};
AggregatedTables aggregate_scores(const std::filesystem::path& scores_path,
                                  const std::vector<corpus::QARecord>& records);

/// From raw per-model means (the published-table path; no topics).
stats::AnalysisReport run_analyze_from_table(const std::filesystem::path& table_csv,
                                             const std::filesystem::path& out_dir);

/// From a scores CSV plus the corpus (topics optional).
stats::AnalysisReport run_analyze_from_scores(const std::filesystem::path& scores_path,
                                              const std::filesystem::path& corpus_path,
                                              bool topics, const std::filesystem::path& out_dir);

struct ReportInputs {
    std::filesystem::path analysis_dir;             // holds analysis.json
    std::optional<std::filesystem::path> table_csv; // re-emitted as metric_table.csv
    std::optional<std::filesystem::path> corpus_path;
    std::optional<std::filesystem::path> config_path;
    std::vector<std::filesystem::path> summaries;   // stage summary JSONs
};

/// Final artifacts + manifest under out_dir; returns written paths.
std::vector<std::filesystem::path> run_report(const ReportInputs& inputs, report::Format format,
                                              const std::filesystem::path& out_dir);

}  // namespace convoeval::pipeline
