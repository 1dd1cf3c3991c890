#pragma once

#include <optional>
#include <string>

#include "hmeasure/beta_weights.hpp"
#include "hmeasure/threshold_metrics.hpp"

namespace hmeasure {

struct ThresholdReport {
    double threshold;
    ConfusionCounts confusion;
    PointMetrics metrics;
};

// Every scalar output of one evaluation, plus the priors and weight shape
// that produced it.
struct MetricReport {
    double h;
    double auc;
    double gini;
    double auch;
    double ks;
    double mer;
    double mer_threshold; // may be +-infinity
    PriorPair priors;
    BetaShape weight;
    std::optional<double> weight_mode; // defined when alpha > 1 and beta > 1
    double weight_k;                   // alpha + beta
    std::optional<ThresholdReport> at_threshold;
};

enum class ReportFormat { json, table };

/// Deterministic serialization. JSON uses the fixed field names
/// {h, auc, gini, auch, ks, mer, pi0, pi1, alpha, beta}, numbers printed
/// with 12 significant digits, undefined metrics as null.
std::string serialize_report(const MetricReport& rep, ReportFormat format);

} // namespace hmeasure
