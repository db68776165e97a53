#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "convoeval/metrics.hpp"

namespace convoeval::stats {

inline constexpr const char* kBaselineModelId = "GS";
inline constexpr std::size_t kNumTableMetrics = 7;
inline constexpr double kSignificanceThreshold = 0.05;

/// model x metric matrix of per-corpus mean scores (the published table
/// shape). The baseline row "GS" is present and carries no consistency
/// value; missing means stay empty.
class MetricTable {
public:
    using Row = std::array<std::optional<double>, kNumTableMetrics>;

    void set(const std::string& model, metrics::MetricId metric, double value);
    std::optional<double> get(const std::string& model, metrics::MetricId metric) const;
    bool has_model(const std::string& model) const;

    const std::vector<std::string>& model_order() const { return order_; }
    bool normalized() const { return normalized_; }

    /// Index of a metric in the table row, or nullopt for auxiliary metrics.
    static std::optional<std::size_t> column_of(metrics::MetricId metric);

    /// CSV round-trip in the published-table shape: model column plus the
    /// seven metric columns, 6-decimal fixed values, GS row first.
    static MetricTable from_csv(const std::string& content);
    static MetricTable from_csv_file(const std::filesystem::path& path);
    std::string to_csv() const;

    friend MetricTable normalize(MetricTable table);

private:
    std::vector<std::string> order_;
    std::map<std::string, Row> rows_;
    bool normalized_ = false;
};

/// Rescales agreeability and active listening by 10 and simplicity by 100 so
/// every metric lives in the same 0-1 range. Applied exactly once; a second
/// call is a logic error.
MetricTable normalize(MetricTable table);

/// Product-moment correlation. Needs n >= 3 and non-zero variance in both
/// vectors (AnalysisError otherwise).
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Two-tailed p for the null r = 0: t = r*sqrt(n-2)/sqrt(1-r^2) against
/// Student's t with n-2 degrees of freedom. |r| = 1 gives p = 0.
double p_value(double r, std::size_t n);

/// L2 distance; vectors must have equal length.
double euclidean(const std::vector<double>& x, const std::vector<double>& y);

/// 0.5 * ln((1+r)/(1-r)); |r| >= 1 is a domain error.
double fisher_z(double r);

enum class ComparisonMethod { independent };
ComparisonMethod comparison_method_from_name(const std::string& name);
const char* comparison_method_name(ComparisonMethod method);

/// Two-sample z for independent correlations:
///   (fisher_z(r1) - fisher_z(r2)) / sqrt(1/(n1-3) + 1/(n2-3))
/// Requires n1, n2 >= 4. |z| > 1.96 is the significance convention.
double compare_correlations(double r1, std::size_t n1, double r2, std::size_t n2,
                            ComparisonMethod method = ComparisonMethod::independent);

/// Regularized incomplete beta I_x(a, b) by continued fraction, relative
/// error <= 1e-10. Exposed for direct verification.
double incomplete_beta(double a, double b, double x);

/// The six baseline-exclusive metrics used for model-vs-GS correlation, in
/// vector order.
inline constexpr metrics::MetricId kCategory2Metrics[] = {
    metrics::MetricId::sentiment_change, metrics::MetricId::intra_sentiment,
    metrics::MetricId::simplicity,       metrics::MetricId::recycling,
    metrics::MetricId::agreeability,     metrics::MetricId::active_listening,
};

struct CorrelationResult {
    double r = 0.0;
    double p = 1.0;
    bool significant = false;
};

struct ModelAnalysis {
    std::string model;
    std::optional<CorrelationResult> overall;
    std::optional<double> euclidean_distance;  // auxiliary similarity
    std::string skip_reason;                   // set when overall is empty
    std::map<std::string, CorrelationResult> by_topic;
};

struct AnalysisReport {
    std::vector<ModelAnalysis> models;          // table order, GS excluded
    std::vector<std::string> topics;            // analyzed topics, sorted
    // z[model][i][j] over `topics`; antisymmetric, zero diagonal
    std::map<std::string, std::vector<std::vector<double>>> topic_z;
    std::string method = "independent";
    double significance_threshold = kSignificanceThreshold;
    std::vector<std::string> warnings;

    std::string to_json() const;
    static AnalysisReport from_json(const std::string& content);
};

/// Correlates every model's six-metric vector against the GS baseline on the
/// normalized table; when per-topic tables are given, repeats the analysis
/// per topic and fills the pairwise topic z matrix per model. Tables must be
/// raw (un-normalized); normalization happens here, exactly once.
AnalysisReport analyze(const MetricTable& table,
                       const std::map<std::string, MetricTable>& by_topic = {});

}  // namespace convoeval::stats
