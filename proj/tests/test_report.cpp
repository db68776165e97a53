#include <doctest.h>

#include <filesystem>
#include <unistd.h>

#include "convoeval/errors.hpp"
#include "convoeval/report.hpp"
#include "convoeval/util.hpp"

#include <json.hpp>

using namespace convoeval;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static int n = 0;
        path = std::filesystem::temp_directory_path() /
               ("convoeval_report_" + std::to_string(::getpid()) + "_" + std::to_string(++n));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

stats::MetricTable fixture_table() {
    return stats::MetricTable::from_csv_file(std::string(CONVOEVAL_DATA_DIR) +
                                             "/fixtures/table2.csv");
}

}  // namespace

TEST_CASE("format tags") {
    CHECK(report::format_from_name("json") == report::Format::json);
    CHECK(report::format_from_name("csv") == report::Format::csv);
    CHECK(report::format_from_name("all") == report::Format::all);
    CHECK_THROWS_AS(report::format_from_name("yaml"), ConfigError);
}

TEST_CASE("emit_metric_table writes byte-stable golden output") {
    TempDir dir;
    auto table = fixture_table();
    auto path = dir.path / "table.csv";
    report::emit_metric_table(table, path);
    std::string first = util::read_file(path);
    CHECK(first == util::read_file(std::string(CONVOEVAL_DATA_DIR) + "/fixtures/table2.csv"));

    report::emit_metric_table(table, path);
    CHECK(util::read_file(path) == first);  // re-run, identical bytes
}

TEST_CASE("empty table emits a header-only csv") {
    TempDir dir;
    stats::MetricTable empty;
    auto path = dir.path / "empty.csv";
    report::emit_metric_table(empty, path);
    CHECK(util::read_file(path) ==
          "model,consistency,sentiment_change,intra_sentiment,simplicity,recycling,"
          "agreeability,active_listening\n");
}

TEST_CASE("emit_analysis writes the table-3 shaped artifacts") {
    TempDir dir;
    auto analysis = stats::analyze(fixture_table());
    auto written = report::emit_analysis(analysis, dir.path, report::Format::all);
    CHECK(written.size() == 2);  // analysis.json + correlation.csv (no topics)

    auto csv = util::read_file(dir.path / "correlation.csv");
    CHECK(csv.find("model,pearson_r,p_value,significant,euclidean_distance\n") == 0);
    CHECK(csv.find("GPT4 Preview,0.830253,0.040775,true,") != std::string::npos);
    CHECK(csv.find("GPT3.5,0.712032,0.112448,false,") != std::string::npos);

    // significance column flags exactly one model
    std::size_t flags = 0, pos = 0;
    while ((pos = csv.find(",true,", pos)) != std::string::npos) {
        ++flags;
        pos += 1;
    }
    CHECK(flags == 1);
}

TEST_CASE("topic artifacts and heatmap grid") {
    stats::MetricTable overall, topic_a, topic_b;
    double gs_values[] = {0.7, 0.5, 86.0, 0.07, 6.6, 7.3};
    double va[] = {0.71, 0.52, 40.0, 0.08, 7.5, 8.3};
    double vb[] = {0.66, 0.49, 30.0, 0.12, 6.0, 7.0};
    std::size_t i = 0;
    for (auto id : stats::kCategory2Metrics) {
        overall.set("GS", id, gs_values[i]);
        overall.set("m", id, va[i]);
        topic_a.set("GS", id, gs_values[i]);
        topic_a.set("m", id, va[i]);
        topic_b.set("GS", id, gs_values[i]);
        topic_b.set("m", id, vb[i]);
        ++i;
    }
    auto analysis =
        stats::analyze(overall, {{"anxiety", topic_a}, {"depression", topic_b}});

    TempDir dir;
    auto written = report::emit_analysis(analysis, dir.path, report::Format::all);
    CHECK(written.size() == 5);

    auto topics_r = util::read_file(dir.path / "topics_r.csv");
    CHECK(topics_r.find("model,anxiety,depression\n") == 0);
    auto grid = nlohmann::json::parse(util::read_file(dir.path / "zscores.json"));
    CHECK(grid["models"] == nlohmann::json::array({"m"}));
    CHECK(grid["topic_pairs"] == nlohmann::json::array({"anxiety vs depression"}));
    REQUIRE(grid["z"].size() == 1);
    REQUIRE(grid["z"][0].size() == 1);
    CHECK(grid["z"][0][0].get<double>() != 0.0);
}

TEST_CASE("single-topic report emits no z matrix") {
    stats::MetricTable overall, topic_a;
    double gs_values[] = {0.7, 0.5, 86.0, 0.07, 6.6, 7.3};
    double va[] = {0.71, 0.52, 40.0, 0.08, 7.5, 8.3};
    std::size_t i = 0;
    for (auto id : stats::kCategory2Metrics) {
        overall.set("GS", id, gs_values[i]);
        overall.set("m", id, va[i]);
        topic_a.set("GS", id, gs_values[i]);
        topic_a.set("m", id, va[i]);
        ++i;
    }
    auto analysis = stats::analyze(overall, {{"solo", topic_a}});
    CHECK(analysis.topic_z.empty());

    TempDir dir;
    report::emit_analysis(analysis, dir.path, report::Format::all);
    CHECK_FALSE(std::filesystem::exists(dir.path / "zscores.json"));
}

TEST_CASE("all-zero z matrix emits a grid of zeros") {
    stats::AnalysisReport analysis;
    analysis.topics = {"a", "b"};
    stats::ModelAnalysis m;
    m.model = "m";
    analysis.models.push_back(m);
    analysis.topic_z["m"] = {{0.0, 0.0}, {0.0, 0.0}};

    TempDir dir;
    report::emit_analysis(analysis, dir.path, report::Format::json);
    auto grid = nlohmann::json::parse(util::read_file(dir.path / "zscores.json"));
    CHECK(grid["z"][0][0].get<double>() == 0.0);
}

TEST_CASE("manifest serialization") {
    report::RunManifest manifest;
    manifest.config_digest = std::string(64, 'a');
    manifest.corpus_digest = std::string(64, 'b');
    manifest.models = {"m1", "m2"};
    manifest.cache_hits = 10;
    manifest.cache_misses = 2;
    manifest.skipped["ingest.malformed"] = 1;
    manifest.tool_version = "0.1.0";
    manifest.created_at = "2024-01-01T00:00:00Z";

    TempDir dir;
    report::emit_manifest(manifest, dir.path / "manifest.json");
    auto j = nlohmann::json::parse(util::read_file(dir.path / "manifest.json"));
    CHECK(j["config_digest"].get<std::string>().size() == 64);
    CHECK(j["cache"]["hits"] == 10);
    CHECK(j["skipped"]["ingest.malformed"] == 1);
    CHECK(j["tool_version"] == "0.1.0");
}
