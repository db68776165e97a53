#include "convoeval/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "convoeval/csv.hpp"
#include "convoeval/errors.hpp"
#include "convoeval/util.hpp"
#include "convoeval/version.hpp"

namespace convoeval::pipeline {

using nlohmann::json;

namespace {

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::filesystem::path& path) {
    return path.is_absolute() ? path : base / path;
}

void require_exists(const std::filesystem::path& path, const std::string& what) {
    if (!std::filesystem::exists(path)) {
        throw ConfigError(what + " does not exist: " + path.string());
    }
}

gateway::ModelSpec model_spec_from_json(const json& j) {
    gateway::ModelSpec spec;
    if (!j.contains("model_id") || !j.contains("endpoint_url")) {
        throw ConfigError("model entries need model_id and endpoint_url");
    }
    spec.model_id = j.at("model_id").get<std::string>();
    spec.endpoint_url = j.at("endpoint_url").get<std::string>();
    spec.credential_env = j.value("credential_env", std::string{});
    spec.temperature = j.value("temperature", 0.0);
    spec.max_tokens = j.value("max_tokens", 1024);
    spec.request_timeout_seconds = j.value("request_timeout_seconds", 60.0);
    if (spec.temperature < 0.0) throw ConfigError("temperature must be >= 0");
    if (spec.max_tokens <= 0) throw ConfigError("max_tokens must be positive");
    if (spec.request_timeout_seconds <= 0.0) throw ConfigError("request_timeout must be positive");
    util::parse_url(spec.endpoint_url);
    return spec;
}

json model_spec_to_json(const gateway::ModelSpec& spec) {
    return json{{"model_id", spec.model_id},
                {"endpoint_url", spec.endpoint_url},
                {"credential_env", spec.credential_env},
                {"temperature", spec.temperature},
                {"max_tokens", spec.max_tokens},
                {"request_timeout_seconds", spec.request_timeout_seconds}};
}

gateway::RetryPolicy retry_from_json(const json& j) {
    gateway::RetryPolicy retry;
    retry.max_attempts = j.value("max_attempts", 5);
    retry.base_seconds = j.value("base_seconds", 1.0);
    retry.factor = j.value("factor", 2.0);
    retry.jitter = j.value("jitter", 0.5);
    if (retry.max_attempts < 1) throw ConfigError("retry.max_attempts must be >= 1");
    if (retry.base_seconds < 0.0 || retry.factor < 1.0 || retry.jitter < 0.0 ||
        retry.jitter >= 1.0) {
        throw ConfigError("retry parameters out of range");
    }
    return retry;
}

std::string load_prompt_file(const std::filesystem::path& path) {
    std::string content = util::read_file(path);
    if (!content.empty() && content.back() == '\n') content.pop_back();
    if (!content.empty() && content.back() == '\r') content.pop_back();
    return content;
}

}  // namespace

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
    return from_json_string(util::read_file(path), path.parent_path());
}

RunConfig RunConfig::from_json_string(const std::string& content,
                                      const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(content);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    int schema = j.value("schema_version", kConfigSchemaVersion);
    if (schema != kConfigSchemaVersion) {
        throw ConfigError("unsupported config schema version " + std::to_string(schema));
    }

    RunConfig config;
    if (j.contains("paths")) {
        const json& paths = j["paths"];
        if (paths.contains("corpus")) {
            config.corpus_path = resolve(base_dir, paths["corpus"].get<std::string>());
        }
        if (paths.contains("cache_dir")) {
            config.cache_dir = resolve(base_dir, paths["cache_dir"].get<std::string>());
        }
        if (paths.contains("output_dir")) {
            config.output_dir = resolve(base_dir, paths["output_dir"].get<std::string>());
        }
        if (paths.contains("column_map")) {
            config.column_map_path = resolve(base_dir, paths["column_map"].get<std::string>());
            require_exists(*config.column_map_path, "column map");
        }
    }
    for (const json& m : j.value("models", json::array())) {
        config.models.push_back(model_spec_from_json(m));
    }
    {
        std::unordered_map<std::string, int> seen;
        for (const auto& spec : config.models) {
            if (++seen[spec.model_id] > 1) {
                throw ConfigError("duplicate model_id: " + spec.model_id);
            }
            if (spec.model_id == stats::kBaselineModelId) {
                throw ConfigError("model_id GS is reserved for the baseline");
            }
        }
    }

    if (j.contains("judge")) {
        const json& jj = j["judge"];
        if (!jj.contains("model")) throw ConfigError("judge config needs a model");
        config.judge.model = model_spec_from_json(jj["model"]);
        config.judge.model.temperature = 0.0;
        config.judge.max_parse_retries = jj.value("max_parse_retries", 3);
        if (config.judge.max_parse_retries < 1) {
            throw ConfigError("judge.max_parse_retries must be >= 1");
        }
        if (jj.contains("system_message_path")) {
            config.judge.system_message =
                load_prompt_file(resolve(base_dir, jj["system_message_path"].get<std::string>()));
        }
        if (jj.contains("agreeability_prompt_path")) {
            config.judge.agreeability_prompt = load_prompt_file(
                resolve(base_dir, jj["agreeability_prompt_path"].get<std::string>()));
        }
        if (jj.contains("active_listening_prompt_path")) {
            config.judge.active_listening_prompt = load_prompt_file(
                resolve(base_dir, jj["active_listening_prompt_path"].get<std::string>()));
        }
        config.judge_configured = true;
    }

    if (j.contains("metrics")) {
        const json& jm = j["metrics"];
        config.metric.rbo_p = jm.value("rbo_p", 0.9);
        config.metric.rbo_k = jm.value("rbo_k", 10);
        config.metric.eps = jm.value("eps", 1e-6);
        std::string mode = jm.value("recycling_mode", "multiset");
        if (mode == "multiset") {
            config.metric.recycling_mode = metrics::RecyclingMode::multiset;
        } else if (mode == "set") {
            config.metric.recycling_mode = metrics::RecyclingMode::set;
        } else {
            throw ConfigError("recycling_mode must be multiset or set");
        }
        if (config.metric.rbo_p <= 0.0 || config.metric.rbo_p >= 1.0) {
            throw ConfigError("rbo_p must be in (0,1)");
        }
        if (config.metric.rbo_k < 1) throw ConfigError("rbo_k must be >= 1");
        if (config.metric.eps <= 0.0) throw ConfigError("eps must be positive");
        if (jm.contains("fluff_path")) {
            config.fluff_path = resolve(base_dir, jm["fluff_path"].get<std::string>());
            require_exists(*config.fluff_path, "fluff list");
        }
        if (jm.contains("lexicon_path")) {
            config.lexicon_path = resolve(base_dir, jm["lexicon_path"].get<std::string>());
            require_exists(*config.lexicon_path, "sentiment lexicon");
        }
    }

    if (j.contains("emotion")) {
        const json& je = j["emotion"];
        config.emotion.backend = je.value("backend", "lexicon");
        if (config.emotion.backend != "lexicon" && config.emotion.backend != "remote") {
            throw ConfigError("emotion backend must be lexicon or remote");
        }
        config.emotion.endpoint_url = je.value("endpoint_url", std::string{});
        if (config.emotion.backend == "remote") {
            if (config.emotion.endpoint_url.empty()) {
                throw ConfigError("remote emotion backend needs endpoint_url");
            }
            util::parse_url(config.emotion.endpoint_url);
        }
        if (je.contains("lexicon_path")) {
            config.emotion.lexicon_path =
                resolve(base_dir, je["lexicon_path"].get<std::string>());
            require_exists(*config.emotion.lexicon_path, "emotion lexicon");
        }
        config.emotion.top_k = je.value("top_k", 10);
        if (config.emotion.top_k < 1) throw ConfigError("emotion top_k must be >= 1");
    }

    if (j.contains("collection")) {
        const json& jc = j["collection"];
        config.collection.parallelism = jc.value("parallelism", 4);
        config.collection.system_message = jc.value("system_message", std::string{});
        if (jc.contains("retry")) config.collection.retry = retry_from_json(jc["retry"]);
        if (config.collection.parallelism < 1) throw ConfigError("parallelism must be >= 1");
    }

    if (j.contains("analysis")) {
        const json& ja = j["analysis"];
        config.analysis.topics = ja.value("topics", true);
        config.analysis.method = ja.value("method", "independent");
        stats::comparison_method_from_name(config.analysis.method);
    }
    return config;
}

std::string RunConfig::canonical_json() const {
    json models_json = json::array();
    for (const auto& spec : models) models_json.push_back(model_spec_to_json(spec));
    json j{{"schema_version", kConfigSchemaVersion},
           {"paths",
            {{"corpus", corpus_path.string()},
             {"cache_dir", cache_dir.string()},
             {"output_dir", output_dir.string()},
             {"column_map", column_map_path ? column_map_path->string() : ""}}},
           {"models", std::move(models_json)},
           {"judge",
            {{"configured", judge_configured},
             {"model", judge_configured ? model_spec_to_json(judge.model) : json{}},
             {"max_parse_retries", judge.max_parse_retries},
             {"system_message", judge.system_message},
             {"agreeability_prompt", judge.agreeability_prompt},
             {"active_listening_prompt", judge.active_listening_prompt}}},
           {"metrics",
            {{"rbo_p", metric.rbo_p},
             {"rbo_k", metric.rbo_k},
             {"eps", metric.eps},
             {"recycling_mode",
              metric.recycling_mode == metrics::RecyclingMode::multiset ? "multiset" : "set"},
             {"fluff_path", fluff_path ? fluff_path->string() : ""},
             {"lexicon_path", lexicon_path ? lexicon_path->string() : ""}}},
           {"emotion",
            {{"backend", emotion.backend},
             {"endpoint_url", emotion.endpoint_url},
             {"lexicon_path", emotion.lexicon_path ? emotion.lexicon_path->string() : ""},
             {"top_k", emotion.top_k}}},
           {"collection",
            {{"parallelism", collection.parallelism},
             {"system_message", collection.system_message},
             {"retry",
              {{"max_attempts", collection.retry.max_attempts},
               {"base_seconds", collection.retry.base_seconds},
               {"factor", collection.retry.factor},
               {"jitter", collection.retry.jitter}}}}},
           {"analysis", {{"topics", analysis.topics}, {"method", analysis.method}}}};
    return j.dump();
}

text::SentimentLexicon RunConfig::load_lexicon() const {
    if (lexicon_path) return text::SentimentLexicon::from_file(*lexicon_path);
    return text::SentimentLexicon::from_string(default_sentiment_lexicon());
}

metrics::FluffList RunConfig::load_fluff() const {
    if (fluff_path) return metrics::FluffList::from_file(*fluff_path);
    return metrics::FluffList::from_string(default_fluff_words());
}

std::unique_ptr<emotion::Classifier> RunConfig::make_classifier() const {
    if (emotion.backend == "remote") {
        return std::make_unique<emotion::RemoteClassifier>(emotion.endpoint_url);
    }
    if (emotion.lexicon_path) {
        return std::make_unique<emotion::LexiconClassifier>(
            emotion::LexiconClassifier::from_file(*emotion.lexicon_path));
    }
    return std::make_unique<emotion::LexiconClassifier>(
        emotion::LexiconClassifier::from_string(default_emotion_lexicon()));
}

std::string IngestSummary::to_json() const {
    json j{{"stage", "ingest"},
           {"rows_read", rows_read},
           {"records", records},
           {"skipped", {{"malformed", skipped_malformed}, {"empty", skipped_empty}}},
           {"topic_count", topic_count}};
    return j.dump(2) + "\n";
}

IngestSummary run_ingest(const std::filesystem::path& input_csv,
                         const std::filesystem::path& column_map,
                         const std::filesystem::path& out_corpus) {
    auto map = corpus::ColumnMap::from_file(column_map);
    auto ingested = corpus::ingest(util::read_file(input_csv), map);
    corpus::save_jsonl(ingested.records, out_corpus);

    IngestSummary summary;
    summary.rows_read = ingested.stats.rows_read;
    summary.records = ingested.records.size();
    summary.skipped_malformed = ingested.stats.skipped_malformed;
    summary.skipped_empty = ingested.stats.skipped_empty;
    summary.topic_count = ingested.stats.topics.size();
    util::write_file_atomic(out_corpus.string() + ".summary.json", summary.to_json());
    return summary;
}

std::string CollectSummary::to_json() const {
    json j{{"stage", "collect"},
           {"pairs_attempted", pairs_attempted},
           {"pairs_ok", pairs_ok},
           {"pairs_failed", pairs_failed},
           {"cache", {{"hits", cache_hits}, {"misses", cache_misses}}}};
    return j.dump(2) + "\n";
}

CollectSummary run_collect(const std::filesystem::path& corpus_path,
                           const std::vector<gateway::ModelSpec>& models,
                           const std::filesystem::path& cache_dir,
                           const std::filesystem::path& out_responses,
                           const CollectionConfig& options) {
    if (models.empty()) throw ConfigError("no models configured for collection");
    auto records = corpus::load_jsonl(corpus_path);
    gateway::ResponseCache cache(cache_dir);
    gateway::CollectOptions collect_options;
    collect_options.parallelism = options.parallelism;
    collect_options.system_message = options.system_message;
    collect_options.retry = options.retry;

    auto sets = gateway::collect_responses(records, models, cache, collect_options);
    gateway::save_jsonl(sets, out_responses);

    CollectSummary summary;
    for (const auto& set : sets) {
        for (const auto& [model_id, response] : set.responses) {
            ++summary.pairs_attempted;
            if (response.ok) {
                ++summary.pairs_ok;
            } else {
                ++summary.pairs_failed;
            }
        }
    }
    summary.cache_hits = cache.hits();
    summary.cache_misses = cache.misses();
    util::write_file_atomic(out_responses.string() + ".summary.json", summary.to_json());
    return summary;
}

std::string ScoreSummary::to_json() const {
    json j{{"stage", "score"},
           {"questions", questions},
           {"rows", rows},
           {"cache", {{"hits", cache_hits}, {"misses", cache_misses}}},
           {"unscored", unscored}};
    return j.dump(2) + "\n";
}

namespace {

struct ScoredRow {
    std::string model_id;  // "GS" or a model id
    std::vector<metrics::MetricValue> values;
};

struct ScoredQuestion {
    std::string question_id;
    std::vector<ScoredRow> rows;
};

constexpr metrics::MetricId kCsvMetricOrder[] = {
    metrics::MetricId::consistency,     metrics::MetricId::sentiment_change,
    metrics::MetricId::intra_sentiment, metrics::MetricId::simplicity,
    metrics::MetricId::simplicity_grade, metrics::MetricId::recycling,
    metrics::MetricId::agreeability,    metrics::MetricId::active_listening,
};

std::string scores_to_csv(const std::vector<ScoredQuestion>& scored) {
    std::string out = csv::encode_row({"question_id", "model_id", "metric_id", "value",
                                       "applicable"});
    for (const auto& question : scored) {
        for (const auto& row : question.rows) {
            // fixed metric order, independent of compute order
            for (metrics::MetricId id : kCsvMetricOrder) {
                auto it = std::find_if(row.values.begin(), row.values.end(),
                                       [&](const metrics::MetricValue& v) { return v.id == id; });
                if (it == row.values.end()) continue;
                out += csv::encode_row({question.question_id, row.model_id,
                                        metrics::metric_name(id),
                                        it->value ? util::format_fixed(*it->value, 6) : "",
                                        it->value ? "true" : "false"});
            }
        }
    }
    return out;
}

}  // namespace

ScoreSummary run_score(const std::filesystem::path& corpus_path,
                       const std::filesystem::path& responses_path, const RunConfig& config,
                       const std::filesystem::path& out_scores,
                       const std::filesystem::path& out_mean_table) {
    if (!config.judge_configured) {
        throw ConfigError("scoring requires a judge model in the config");
    }
    auto records = corpus::load_jsonl(corpus_path);
    auto response_sets = gateway::load_response_sets(responses_path);
    std::unordered_map<std::string, const gateway::ResponseSet*> responses_by_id;
    for (const auto& set : response_sets) responses_by_id[set.question_id] = &set;

    const auto lexicon = config.load_lexicon();
    const auto fluff = config.load_fluff();
    const auto classifier = config.make_classifier();
    gateway::ResponseCache cache(config.cache_dir);

    // model order: the responses file defines which models exist
    std::vector<std::string> model_ids;
    if (!response_sets.empty()) {
        for (const auto& [model_id, r] : response_sets.front().responses) {
            model_ids.push_back(model_id);
        }
    }

    std::vector<ScoredQuestion> scored(records.size());
    std::mutex unscored_mutex;
    std::map<std::string, std::uint64_t> unscored;
    auto tally = [&](const std::string& reason) {
        std::lock_guard<std::mutex> lock(unscored_mutex);
        ++unscored[reason];
    };

    auto judge_values = [&](const std::string& question,
                            const std::string& response_text) -> std::vector<metrics::MetricValue> {
        std::vector<metrics::MetricValue> values;
        auto agree = judge::agreeability(question, response_text, config.judge, cache);
        if (agree.score) {
            values.push_back({metrics::MetricId::agreeability,
                              static_cast<double>(*agree.score), {}});
        } else {
            values.push_back({metrics::MetricId::agreeability, std::nullopt, agree.reason});
            tally("judge_agreeability_failed");
        }
        auto listen = judge::active_listening(question, response_text, config.judge, cache);
        if (listen.score) {
            values.push_back({metrics::MetricId::active_listening,
                              static_cast<double>(*listen.score), {}});
        } else {
            values.push_back({metrics::MetricId::active_listening, std::nullopt, listen.reason});
            tally("judge_active_listening_failed");
        }
        return values;
    };

    auto score_question = [&](std::size_t index) {
        const corpus::QARecord& record = records[index];
        ScoredQuestion& out = scored[index];
        out.question_id = record.question_id;

        // gold profile feeds every consistency value for this question
        std::optional<emotion::EmotionProfile> gs_profile;
        std::string profile_failure;
        try {
            gs_profile = classifier->classify(record.gold_response_text)
                             .truncated(static_cast<std::size_t>(config.emotion.top_k));
        } catch (const std::exception& e) {
            profile_failure = std::string("baseline classification failed: ") + e.what();
            tally("classification_failed");
        }

        // GS row: category-2 metrics of the gold answer (no consistency)
        {
            ScoredRow row;
            row.model_id = stats::kBaselineModelId;
            row.values = metrics::score_pair(record.question_text, record.gold_response_text,
                                             std::nullopt, std::nullopt, lexicon, fluff,
                                             config.metric, "baseline row");
            row.values.erase(std::remove_if(row.values.begin(), row.values.end(),
                                            [](const metrics::MetricValue& v) {
                                                return v.id == metrics::MetricId::consistency;
                                            }),
                             row.values.end());
            auto judged = judge_values(record.question_text, record.gold_response_text);
            row.values.insert(row.values.end(), judged.begin(), judged.end());
            out.rows.push_back(std::move(row));
        }

        auto set_it = responses_by_id.find(record.question_id);
        for (const std::string& model_id : model_ids) {
            ScoredRow row;
            row.model_id = model_id;
            const gateway::CollectedResponse* response = nullptr;
            if (set_it != responses_by_id.end()) {
                auto r = set_it->second->responses.find(model_id);
                if (r != set_it->second->responses.end()) response = &r->second;
            }
            if (response == nullptr || !response->ok) {
                std::string reason = response == nullptr ? "no collected response"
                                                         : "collection failed: " + response->error;
                for (metrics::MetricId id : kCsvMetricOrder) {
                    row.values.push_back({id, std::nullopt, reason});
                }
                tally("collection_failed");
                out.rows.push_back(std::move(row));
                continue;
            }

            std::optional<emotion::EmotionProfile> response_profile;
            std::string pair_failure = profile_failure;
            if (gs_profile) {
                try {
                    response_profile =
                        classifier->classify(response->text)
                            .truncated(static_cast<std::size_t>(config.emotion.top_k));
                } catch (const std::exception& e) {
                    pair_failure = std::string("response classification failed: ") + e.what();
                    tally("classification_failed");
                }
            }
            row.values = metrics::score_pair(record.question_text, response->text, gs_profile,
                                             response_profile, lexicon, fluff, config.metric,
                                             pair_failure);
            auto judged = judge_values(record.question_text, response->text);
            row.values.insert(row.values.end(), judged.begin(), judged.end());
            out.rows.push_back(std::move(row));
        }
    };

    // bounded pool over questions; judge and remote-classifier calls inherit it
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t index = next.fetch_add(1);
            if (index >= records.size()) return;
            score_question(index);
        }
    };
    const std::size_t thread_count = std::min<std::size_t>(
        static_cast<std::size_t>(std::max(config.collection.parallelism, 1)),
        std::max<std::size_t>(records.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    util::write_file_atomic(out_scores, scores_to_csv(scored));

    // per-model means (overall table); topic tables are rebuilt by analyze
    struct Accumulator {
        double sum = 0.0;
        std::size_t count = 0;
    };
    std::map<std::string, std::array<Accumulator, stats::kNumTableMetrics>> sums;
    std::vector<std::string> model_order{stats::kBaselineModelId};
    model_order.insert(model_order.end(), model_ids.begin(), model_ids.end());
    for (const auto& question : scored) {
        for (const auto& row : question.rows) {
            for (const auto& value : row.values) {
                auto col = stats::MetricTable::column_of(value.id);
                if (!col || !value.value) continue;
                auto& acc = sums[row.model_id][*col];
                acc.sum += *value.value;
                ++acc.count;
            }
        }
    }
    stats::MetricTable table;
    for (const std::string& model : model_order) {
        auto it = sums.find(model);
        if (it == sums.end()) continue;
        for (std::size_t c = 0; c < stats::kNumTableMetrics; ++c) {
            if (it->second[c].count == 0) continue;
            table.set(model, metrics::kTableMetrics[c],
                      it->second[c].sum / static_cast<double>(it->second[c].count));
        }
    }
    report::emit_metric_table(table, out_mean_table);

    ScoreSummary summary;
    summary.questions = records.size();
    for (const auto& question : scored) summary.rows += question.rows.size();
    summary.cache_hits = cache.hits();
    summary.cache_misses = cache.misses();
    summary.unscored = std::move(unscored);
    util::write_file_atomic(out_scores.string() + ".summary.json", summary.to_json());
    return summary;
}

AggregatedTables aggregate_scores(const std::filesystem::path& scores_path,
                                  const std::vector<corpus::QARecord>& records) {
    std::unordered_map<std::string, std::string> topic_by_id;
    for (const auto& record : records) topic_by_id[record.question_id] = record.topic;

    auto rows = csv::parse(util::read_file(scores_path));
    if (rows.empty()) throw IoError("scores file is empty");
    const auto& header = rows.front().fields;
    if (header != std::vector<std::string>{"question_id", "model_id", "metric_id", "value",
                                           "applicable"}) {
        throw ConfigError("unexpected scores csv header");
    }

    struct Accumulator {
        double sum = 0.0;
        std::size_t count = 0;
    };
    using RowAcc = std::array<Accumulator, stats::kNumTableMetrics>;
    std::map<std::string, RowAcc> overall;
    std::map<std::string, std::map<std::string, RowAcc>> by_topic;
    std::vector<std::string> model_order;
    auto note_model = [&](const std::string& model) {
        if (std::find(model_order.begin(), model_order.end(), model) == model_order.end()) {
            model_order.push_back(model);
        }
    };

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& fields = rows[r].fields;
        if (rows[r].malformed || fields.size() != 5) {
            throw IoError("scores row " + std::to_string(r + 1) + " is malformed");
        }
        const std::string& question_id = fields[0];
        const std::string& model = fields[1];
        auto metric = metrics::metric_from_name(fields[2]);
        if (!metric) throw ConfigError("unknown metric_id in scores: " + fields[2]);
        note_model(model);
        if (fields[4] != "true") continue;
        auto col = stats::MetricTable::column_of(*metric);
        if (!col) continue;  // auxiliary metric
        double value = 0.0;
        try {
            value = std::stod(fields[3]);
        } catch (const std::exception&) {
            throw IoError("scores row " + std::to_string(r + 1) + ": bad value");
        }
        overall[model][*col].sum += value;
        ++overall[model][*col].count;
        auto topic_it = topic_by_id.find(question_id);
        if (topic_it != topic_by_id.end()) {
            auto& acc = by_topic[topic_it->second][model][*col];
            acc.sum += value;
            ++acc.count;
        }
    }

    auto build = [&](const std::map<std::string, RowAcc>& accumulator) {
        stats::MetricTable table;
        for (const std::string& model : model_order) {
            auto it = accumulator.find(model);
            if (it == accumulator.end()) continue;
            for (std::size_t c = 0; c < stats::kNumTableMetrics; ++c) {
                if (it->second[c].count == 0) continue;
                table.set(model, metrics::kTableMetrics[c],
                          it->second[c].sum / static_cast<double>(it->second[c].count));
            }
        }
        return table;
    };

    AggregatedTables tables;
    tables.overall = build(overall);
    for (const auto& [topic, acc] : by_topic) tables.by_topic.emplace(topic, build(acc));
    return tables;
}

stats::AnalysisReport run_analyze_from_table(const std::filesystem::path& table_csv,
                                             const std::filesystem::path& out_dir) {
    auto table = stats::MetricTable::from_csv_file(table_csv);
    auto report = stats::analyze(table);
    std::filesystem::create_directories(out_dir);
    util::write_file_atomic(out_dir / "analysis.json", report.to_json());
    return report;
}

stats::AnalysisReport run_analyze_from_scores(const std::filesystem::path& scores_path,
                                              const std::filesystem::path& corpus_path,
                                              bool topics, const std::filesystem::path& out_dir) {
    auto records = corpus::load_jsonl(corpus_path);
    auto tables = aggregate_scores(scores_path, records);
    auto report = topics ? stats::analyze(tables.overall, tables.by_topic)
                         : stats::analyze(tables.overall);
    std::filesystem::create_directories(out_dir);
    util::write_file_atomic(out_dir / "analysis.json", report.to_json());
    return report;
}

std::vector<std::filesystem::path> run_report(const ReportInputs& inputs, report::Format format,
                                              const std::filesystem::path& out_dir) {
    auto analysis =
        stats::AnalysisReport::from_json(util::read_file(inputs.analysis_dir / "analysis.json"));
    std::filesystem::create_directories(out_dir);
    auto written = report::emit_analysis(analysis, out_dir, format);

    if (inputs.table_csv) {
        auto table = stats::MetricTable::from_csv_file(*inputs.table_csv);
        auto path = out_dir / "metric_table.csv";
        report::emit_metric_table(table, path);
        written.push_back(path);
    }

    report::RunManifest manifest;
    manifest.tool_version = kToolVersion;
    manifest.created_at = util::iso8601_now();
    manifest.config_digest = util::sha256_hex("{}");
    for (const auto& m : analysis.models) manifest.models.push_back(m.model);
    if (inputs.config_path) {
        auto config = RunConfig::from_file(*inputs.config_path);
        manifest.config_digest = util::sha256_hex(config.canonical_json());
    }
    if (inputs.corpus_path) {
        manifest.corpus_digest = util::sha256_hex(util::read_file(*inputs.corpus_path));
    }
    for (const auto& summary_path : inputs.summaries) {
        json j;
        try {
            j = json::parse(util::read_file(summary_path));
        } catch (const std::exception&) {
            continue;  // foreign file in the summaries dir
        }
        std::string stage = j.value("stage", std::string{});
        if (j.contains("cache")) {
            manifest.cache_hits += j["cache"].value("hits", std::uint64_t{0});
            manifest.cache_misses += j["cache"].value("misses", std::uint64_t{0});
        }
        if (j.contains("skipped") && j["skipped"].is_object()) {
            for (const auto& [reason, count] : j["skipped"].items()) {
                manifest.skipped[stage + "." + reason] += count.get<std::uint64_t>();
            }
        }
        if (j.contains("unscored") && j["unscored"].is_object()) {
            for (const auto& [reason, count] : j["unscored"].items()) {
                manifest.skipped[stage + "." + reason] += count.get<std::uint64_t>();
            }
        }
    }
    auto manifest_path = out_dir / "manifest.json";
    report::emit_manifest(manifest, manifest_path);
    written.push_back(manifest_path);
    return written;
}

}  // namespace convoeval::pipeline
