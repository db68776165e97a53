#include "convoeval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "convoeval/csv.hpp"
#include "convoeval/errors.hpp"
#include "convoeval/util.hpp"

namespace convoeval::stats {

using nlohmann::json;

std::optional<std::size_t> MetricTable::column_of(metrics::MetricId metric) {
    for (std::size_t i = 0; i < kNumTableMetrics; ++i) {
        if (metrics::kTableMetrics[i] == metric) return i;
    }
    return std::nullopt;
}

void MetricTable::set(const std::string& model, metrics::MetricId metric, double value) {
    auto col = column_of(metric);
    if (!col) throw std::logic_error("auxiliary metric cannot enter the table");
    if (model == kBaselineModelId && metric == metrics::MetricId::consistency) {
        throw ConfigError("the GS baseline carries no consistency value");
    }
    auto [it, inserted] = rows_.try_emplace(model);
    if (inserted) order_.push_back(model);
    it->second[*col] = value;
}

std::optional<double> MetricTable::get(const std::string& model, metrics::MetricId metric) const {
    auto col = column_of(metric);
    if (!col) return std::nullopt;
    auto it = rows_.find(model);
    if (it == rows_.end()) return std::nullopt;
    return it->second[*col];
}

bool MetricTable::has_model(const std::string& model) const { return rows_.count(model) > 0; }

MetricTable MetricTable::from_csv(const std::string& content) {
    auto rows = csv::parse(content);
    if (rows.empty()) throw ConfigError("metric table csv is empty");
    const auto& header = rows.front().fields;
    if (header.size() != kNumTableMetrics + 1 || header[0] != "model") {
        throw ConfigError("metric table header must be: model + the 7 metric columns");
    }
    for (std::size_t i = 0; i < kNumTableMetrics; ++i) {
        if (header[i + 1] != metrics::metric_name(metrics::kTableMetrics[i])) {
            throw ConfigError("unexpected metric column: " + header[i + 1]);
        }
    }
    MetricTable table;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& fields = rows[r].fields;
        if (rows[r].malformed || fields.size() != kNumTableMetrics + 1) {
            throw ConfigError("metric table row " + std::to_string(r + 1) + " is malformed");
        }
        const std::string& model = fields[0];
        if (model.empty()) throw ConfigError("metric table row with empty model id");
        if (table.rows_.count(model)) throw ConfigError("duplicate model row: " + model);
        table.rows_.try_emplace(model);
        table.order_.push_back(model);
        for (std::size_t c = 0; c < kNumTableMetrics; ++c) {
            const std::string& cell = fields[c + 1];
            if (cell.empty()) continue;
            double value = 0.0;
            try {
                value = std::stod(cell);
            } catch (const std::exception&) {
                throw ConfigError("bad numeric cell for " + model + ": " + cell);
            }
            table.set(model, metrics::kTableMetrics[c], value);
        }
    }
    return table;
}

MetricTable MetricTable::from_csv_file(const std::filesystem::path& path) {
    return from_csv(util::read_file(path));
}

std::string MetricTable::to_csv() const {
    std::vector<std::string> header{"model"};
    for (metrics::MetricId id : metrics::kTableMetrics) header.emplace_back(metrics::metric_name(id));
    std::string out = csv::encode_row(header);

    // GS first, then the remaining models in table order
    std::vector<std::string> emit_order;
    if (rows_.count(kBaselineModelId)) emit_order.push_back(kBaselineModelId);
    for (const std::string& model : order_) {
        if (model != kBaselineModelId) emit_order.push_back(model);
    }
    for (const std::string& model : emit_order) {
        std::vector<std::string> fields{model};
        const Row& row = rows_.at(model);
        for (const auto& cell : row) {
            fields.push_back(cell ? util::format_fixed(*cell, 6) : "");
        }
        out += csv::encode_row(fields);
    }
    return out;
}

MetricTable normalize(MetricTable table) {
    if (table.normalized_) {
        throw std::logic_error("normalize applied twice to the same table");
    }
    auto scale = [&](metrics::MetricId metric, double divisor) {
        std::size_t col = *MetricTable::column_of(metric);
        for (auto& [model, row] : table.rows_) {
            if (row[col]) row[col] = *row[col] / divisor;
        }
    };
    scale(metrics::MetricId::agreeability, 10.0);
    scale(metrics::MetricId::active_listening, 10.0);
    scale(metrics::MetricId::simplicity, 100.0);
    table.normalized_ = true;
    return table;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw AnalysisError("pearson: length mismatch");
    const std::size_t n = x.size();
    if (n < 3) throw AnalysisError("pearson: need n >= 3");

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mean_x;
        double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw AnalysisError("pearson: zero variance, correlation undefined");
    }
    return sxy / std::sqrt(sxx * syy);
}

namespace {

constexpr double kBetaEps = 1e-14;
constexpr int kBetaMaxIterations = 300;

// Continued fraction for I_x(a,b) (Lentz's method).
double beta_continued_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kBetaMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = 1.0 + aa / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = 1.0 + aa / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kBetaEps) return h;
    }
    throw AnalysisError("incomplete beta did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw AnalysisError("incomplete beta: a, b must be positive");
    if (x < 0.0 || x > 1.0) throw AnalysisError("incomplete beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    // Use the symmetry that keeps the continued fraction fast-converging.
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double p_value(double r, std::size_t n) {
    if (n < 3) throw AnalysisError("p_value: need n >= 3");
    if (std::fabs(r) > 1.0) throw AnalysisError("p_value: |r| > 1");
    if (std::fabs(r) == 1.0) return 0.0;  // convention
    if (r == 0.0) return 1.0;

    const double df = static_cast<double>(n - 2);
    const double t = r * std::sqrt(df) / std::sqrt(1.0 - r * r);
    // two-tailed: P(|T| >= |t|) = I_{df/(df+t^2)}(df/2, 1/2)
    return incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

double euclidean(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw AnalysisError("euclidean: length mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - y[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double fisher_z(double r) {
    if (std::fabs(r) >= 1.0) throw std::domain_error("fisher_z: |r| must be < 1");
    return 0.5 * std::log((1.0 + r) / (1.0 - r));
}

ComparisonMethod comparison_method_from_name(const std::string& name) {
    if (name == "independent") return ComparisonMethod::independent;
    throw ConfigError("unsupported correlation comparison method: " + name);
}

const char* comparison_method_name(ComparisonMethod method) {
    switch (method) {
        case ComparisonMethod::independent: return "independent";
    }
    return "?";
}

double compare_correlations(double r1, std::size_t n1, double r2, std::size_t n2,
                            ComparisonMethod method) {
    switch (method) {
        case ComparisonMethod::independent: {
            if (n1 < 4 || n2 < 4) {
                throw AnalysisError("compare_correlations: need n >= 4 on both sides");
            }
            const double se = std::sqrt(1.0 / static_cast<double>(n1 - 3) +
                                        1.0 / static_cast<double>(n2 - 3));
            return (fisher_z(r1) - fisher_z(r2)) / se;
        }
    }
    throw ConfigError("unsupported correlation comparison method");
}

namespace {

// The six-metric vector of one model, or nullopt plus reason.
std::optional<std::vector<double>> category2_vector(const MetricTable& table,
                                                    const std::string& model,
                                                    std::string* missing) {
    std::vector<double> v;
    v.reserve(std::size(kCategory2Metrics));
    for (metrics::MetricId id : kCategory2Metrics) {
        auto value = table.get(model, id);
        if (!value) {
            if (missing) *missing = std::string("missing mean: ") + metrics::metric_name(id);
            return std::nullopt;
        }
        v.push_back(*value);
    }
    return v;
}

std::optional<CorrelationResult> correlate(const std::vector<double>& baseline,
                                           const std::vector<double>& model_vector,
                                           std::string* failure) {
    try {
        CorrelationResult res;
        res.r = pearson(baseline, model_vector);
        res.p = p_value(res.r, baseline.size());
        res.significant = res.p < kSignificanceThreshold;
        return res;
    } catch (const AnalysisError& e) {
        if (failure) *failure = e.what();
        return std::nullopt;
    }
}

}  // namespace

AnalysisReport analyze(const MetricTable& raw_table,
                       const std::map<std::string, MetricTable>& raw_by_topic) {
    if (!raw_table.has_model(kBaselineModelId)) {
        throw AnalysisError("metric table has no GS baseline row");
    }
    if (raw_table.normalized()) {
        throw AnalysisError("analyze expects a raw table; it normalizes internally");
    }
    MetricTable table = normalize(raw_table);

    AnalysisReport report;
    std::string gs_missing;
    auto gs_vector = category2_vector(table, kBaselineModelId, &gs_missing);
    if (!gs_vector) {
        throw AnalysisError("GS baseline row is incomplete: " + gs_missing);
    }

    // Topics with at least one scored question, analyzed in sorted order.
    std::map<std::string, MetricTable> topic_tables;
    for (const auto& [topic, topic_table] : raw_by_topic) {
        if (topic_table.model_order().empty()) {
            report.warnings.push_back("topic skipped (no scored questions): " + topic);
            continue;
        }
        topic_tables.emplace(topic, normalize(topic_table));
    }
    for (const auto& [topic, topic_table] : topic_tables) report.topics.push_back(topic);

    for (const std::string& model : table.model_order()) {
        if (model == kBaselineModelId) continue;
        ModelAnalysis analysis;
        analysis.model = model;

        std::string failure;
        auto vec = category2_vector(table, model, &failure);
        if (vec) {
            analysis.overall = correlate(*gs_vector, *vec, &failure);
            if (analysis.overall) {
                analysis.euclidean_distance = euclidean(*gs_vector, *vec);
            }
        }
        if (!analysis.overall) {
            analysis.skip_reason = failure;
            report.warnings.push_back("model " + model + ": " + failure);
        }

        for (const auto& [topic, topic_table] : topic_tables) {
            std::string topic_failure;
            auto topic_gs = category2_vector(topic_table, kBaselineModelId, &topic_failure);
            auto topic_vec = topic_gs ? category2_vector(topic_table, model, &topic_failure)
                                      : std::nullopt;
            if (topic_gs && topic_vec) {
                auto res = correlate(*topic_gs, *topic_vec, &topic_failure);
                if (res) {
                    analysis.by_topic.emplace(topic, *res);
                    continue;
                }
            }
            report.warnings.push_back("model " + model + ", topic " + topic + ": " +
                                      topic_failure);
        }

        // Pairwise topic z over the topics this model has correlations for;
        // pairs with a missing side stay at zero.
        const std::size_t t = report.topics.size();
        if (t >= 2) {
            std::vector<std::vector<double>> z(t, std::vector<double>(t, 0.0));
            const std::size_t n = std::size(kCategory2Metrics);
            for (std::size_t i = 0; i < t; ++i) {
                for (std::size_t j = i + 1; j < t; ++j) {
                    auto a = analysis.by_topic.find(report.topics[i]);
                    auto b = analysis.by_topic.find(report.topics[j]);
                    if (a == analysis.by_topic.end() || b == analysis.by_topic.end()) continue;
                    double value = compare_correlations(a->second.r, n, b->second.r, n,
                                                        ComparisonMethod::independent);
                    z[i][j] = value;
                    z[j][i] = -value;
                }
            }
            report.topic_z.emplace(model, std::move(z));
        }
        report.models.push_back(std::move(analysis));
    }
    return report;
}

std::string AnalysisReport::to_json() const {
    json j;
    j["method"] = method;
    j["significance_threshold"] = significance_threshold;
    j["topics"] = topics;
    j["warnings"] = warnings;
    json models_json = json::array();
    for (const ModelAnalysis& m : models) {
        json mj;
        mj["model"] = m.model;
        if (m.overall) {
            mj["r"] = m.overall->r;
            mj["p"] = m.overall->p;
            mj["significant"] = m.overall->significant;
        } else {
            mj["skip_reason"] = m.skip_reason;
        }
        if (m.euclidean_distance) mj["euclidean_distance"] = *m.euclidean_distance;
        if (!m.by_topic.empty()) {
            json tj;
            for (const auto& [topic, res] : m.by_topic) {
                tj[topic] = {{"r", res.r}, {"p", res.p}, {"significant", res.significant}};
            }
            mj["by_topic"] = std::move(tj);
        }
        models_json.push_back(std::move(mj));
    }
    j["models"] = std::move(models_json);
    if (!topic_z.empty()) {
        json zj;
        for (const auto& [model, matrix] : topic_z) zj[model] = matrix;
        j["topic_z"] = std::move(zj);
    }
    return j.dump(2) + "\n";
}

AnalysisReport AnalysisReport::from_json(const std::string& content) {
    json j;
    try {
        j = json::parse(content);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("analysis report is not valid JSON: ") + e.what());
    }
    AnalysisReport report;
    try {
        report.method = j.at("method").get<std::string>();
        report.significance_threshold = j.at("significance_threshold").get<double>();
        report.topics = j.at("topics").get<std::vector<std::string>>();
        if (j.contains("warnings")) {
            report.warnings = j.at("warnings").get<std::vector<std::string>>();
        }
        for (const auto& mj : j.at("models")) {
            ModelAnalysis m;
            m.model = mj.at("model").get<std::string>();
            if (mj.contains("r")) {
                CorrelationResult res;
                res.r = mj.at("r").get<double>();
                res.p = mj.at("p").get<double>();
                res.significant = mj.at("significant").get<bool>();
                m.overall = res;
            }
            if (mj.contains("skip_reason")) m.skip_reason = mj.at("skip_reason").get<std::string>();
            if (mj.contains("euclidean_distance")) {
                m.euclidean_distance = mj.at("euclidean_distance").get<double>();
            }
            if (mj.contains("by_topic")) {
                for (const auto& [topic, tj] : mj.at("by_topic").items()) {
                    CorrelationResult res;
                    res.r = tj.at("r").get<double>();
                    res.p = tj.at("p").get<double>();
                    res.significant = tj.at("significant").get<bool>();
                    m.by_topic.emplace(topic, res);
                }
            }
            report.models.push_back(std::move(m));
        }
        if (j.contains("topic_z")) {
            for (const auto& [model, matrix] : j.at("topic_z").items()) {
                report.topic_z.emplace(model,
                                       matrix.get<std::vector<std::vector<double>>>());
            }
        }
    } catch (const json::exception& e) {
        throw IoError(std::string("analysis report fields invalid: ") + e.what());
    }
    return report;
}

}  // namespace convoeval::stats
