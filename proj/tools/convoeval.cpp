// convoeval: evaluates chat-model conversation quality against a verified
// human baseline. Subcommands are pure pipeline stages over files:
// ingest -> collect -> score -> analyze -> report.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "convoeval/errors.hpp"
#include "convoeval/pipeline.hpp"
#include "convoeval/util.hpp"
#include "convoeval/version.hpp"

namespace {

using namespace convoeval;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitStrictCollect = 3;
constexpr int kExitAnalysis = 4;

std::vector<gateway::ModelSpec> models_from_file(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(util::read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("models file is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ConfigError("models file must be a JSON array");
    std::string wrapped = nlohmann::json{{"models", j}}.dump();
    return pipeline::RunConfig::from_json_string(wrapped, path.parent_path()).models;
}

int run(int argc, char** argv) {
    CLI::App app{"conversation-quality evaluation pipeline"};
    app.set_version_flag("--version", std::string("convoeval ") + kToolVersion +
                                          " (config schema " +
                                          std::to_string(kConfigSchemaVersion) + ")");
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "run configuration JSON")->envname("CONVOEVAL_CONFIG");

    // ingest
    auto* ingest = app.add_subcommand("ingest", "parse a raw Q&A CSV into the canonical corpus");
    std::string ingest_input, ingest_map, ingest_out;
    ingest->add_option("--input", ingest_input, "source CSV with header")->required();
    ingest->add_option("--map", ingest_map, "column map JSON")->required();
    ingest->add_option("--out", ingest_out, "canonical corpus JSONL")->required();

    // collect
    auto* collect = app.add_subcommand("collect", "collect model responses for every question");
    std::string collect_corpus, collect_models, collect_cache, collect_out;
    int collect_parallel = 0;
    bool collect_strict = false;
    collect->add_option("--corpus", collect_corpus, "canonical corpus JSONL")->required();
    collect->add_option("--models", collect_models, "model specs JSON array");
    collect->add_option("--cache", collect_cache, "cache directory");
    collect->add_option("--out", collect_out, "responses JSONL")->required();
    collect->add_option("--parallel", collect_parallel, "max in-flight requests");
    collect->add_flag("--strict", collect_strict, "exit 3 when any pair fails");

    // score
    auto* score = app.add_subcommand("score", "run every metric on corpus + responses");
    std::string score_corpus, score_responses, score_out, score_mean;
    int score_parallel = 0;
    score->add_option("--corpus", score_corpus, "canonical corpus JSONL")->required();
    score->add_option("--responses", score_responses, "responses JSONL")->required();
    score->add_option("--out", score_out, "long-format scores CSV")->required();
    score->add_option("--mean-table", score_mean, "per-model mean table CSV");
    score->add_option("--parallel", score_parallel, "worker pool size");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "correlate models against the GS baseline");
    std::string analyze_scores, analyze_corpus, analyze_table, analyze_out;
    bool analyze_no_topics = false;
    analyze->add_option("--scores", analyze_scores, "long-format scores CSV");
    analyze->add_option("--corpus", analyze_corpus, "corpus JSONL (topics for --scores)");
    analyze->add_option("--table", analyze_table, "pre-built mean table CSV");
    analyze->add_option("--out", analyze_out, "analysis output directory")->required();
    analyze->add_flag("--no-topics", analyze_no_topics, "skip the per-topic breakdown");

    // report
    auto* report_cmd = app.add_subcommand("report", "emit final artifacts and the run manifest");
    std::string report_analysis, report_format = "all", report_out, report_table, report_corpus;
    std::vector<std::string> report_summaries;
    report_cmd->add_option("--analysis", report_analysis, "directory holding analysis.json")
        ->required();
    report_cmd->add_option("--format", report_format, "json, csv or all");
    report_cmd->add_option("--out", report_out, "output directory")->required();
    report_cmd->add_option("--table", report_table, "mean table CSV to re-emit");
    report_cmd->add_option("--corpus", report_corpus, "corpus JSONL for the digest");
    report_cmd->add_option("--summaries", report_summaries, "stage summary JSON files");

    CLI11_PARSE(app, argc, argv);

    pipeline::RunConfig config;
    bool have_config = !config_path.empty();
    if (have_config) config = pipeline::RunConfig::from_file(config_path);

    if (ingest->parsed()) {
        auto summary = pipeline::run_ingest(ingest_input, ingest_map, ingest_out);
        std::cout << "ingest: " << summary.records << " records from " << summary.rows_read
                  << " rows (" << summary.skipped_malformed << " malformed, "
                  << summary.skipped_empty << " empty skipped), " << summary.topic_count
                  << " topics\n";
        return kExitOk;
    }

    if (collect->parsed()) {
        std::vector<gateway::ModelSpec> models = config.models;
        if (!collect_models.empty()) models = models_from_file(collect_models);
        pipeline::CollectionConfig options = config.collection;
        if (collect_parallel > 0) options.parallelism = collect_parallel;
        std::filesystem::path cache_dir =
            !collect_cache.empty() ? std::filesystem::path(collect_cache) : config.cache_dir;
        auto summary =
            pipeline::run_collect(collect_corpus, models, cache_dir, collect_out, options);
        std::cout << "collect: " << summary.pairs_ok << "/" << summary.pairs_attempted
                  << " pairs ok, " << summary.pairs_failed << " failed, cache "
                  << summary.cache_hits << " hits / " << summary.cache_misses << " misses\n";
        if (collect_strict && summary.pairs_failed > 0) return kExitStrictCollect;
        return kExitOk;
    }

    if (score->parsed()) {
        if (!have_config) throw ConfigError("score requires --config");
        if (score_parallel > 0) config.collection.parallelism = score_parallel;
        std::filesystem::path mean_path =
            !score_mean.empty() ? std::filesystem::path(score_mean)
                                : std::filesystem::path(score_out).replace_extension(
                                      ".mean_table.csv");
        auto summary =
            pipeline::run_score(score_corpus, score_responses, config, score_out, mean_path);
        std::cout << "score: " << summary.rows << " rows over " << summary.questions
                  << " questions, judge cache " << summary.cache_hits << " hits / "
                  << summary.cache_misses << " misses\n";
        for (const auto& [reason, count] : summary.unscored) {
            std::cout << "  unscored " << reason << ": " << count << "\n";
        }
        return kExitOk;
    }

    if (analyze->parsed()) {
        if (analyze_table.empty() == analyze_scores.empty()) {
            throw ConfigError("analyze needs exactly one of --table or --scores");
        }
        stats::AnalysisReport result;
        if (!analyze_table.empty()) {
            result = pipeline::run_analyze_from_table(analyze_table, analyze_out);
        } else {
            if (analyze_corpus.empty()) {
                throw ConfigError("analyze --scores needs --corpus for topics");
            }
            bool topics = have_config ? config.analysis.topics : true;
            if (analyze_no_topics) topics = false;
            result = pipeline::run_analyze_from_scores(analyze_scores, analyze_corpus, topics,
                                                       analyze_out);
        }
        for (const auto& m : result.models) {
            if (m.overall) {
                std::cout << "analyze: " << m.model << " r=" << util::format_fixed(m.overall->r, 6)
                          << " p=" << util::format_fixed(m.overall->p, 6)
                          << (m.overall->significant ? " significant" : "") << "\n";
            } else {
                std::cout << "analyze: " << m.model << " skipped: " << m.skip_reason << "\n";
            }
        }
        return kExitOk;
    }

    if (report_cmd->parsed()) {
        pipeline::ReportInputs inputs;
        inputs.analysis_dir = report_analysis;
        if (!report_table.empty()) inputs.table_csv = report_table;
        if (!report_corpus.empty()) inputs.corpus_path = report_corpus;
        if (have_config) inputs.config_path = config_path;
        for (const auto& s : report_summaries) inputs.summaries.emplace_back(s);
        auto written = pipeline::run_report(inputs, report::format_from_name(report_format),
                                            report_out);
        std::cout << "report: wrote " << written.size() << " files under " << report_out << "\n";
        return kExitOk;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const AnalysisError& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return kExitAnalysis;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
