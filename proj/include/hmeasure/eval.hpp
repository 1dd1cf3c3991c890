#pragma once

#include <optional>
#include <string>

#include "hmeasure/beta_weights.hpp"
#include "hmeasure/report.hpp"

namespace hmeasure {

struct EvalConfig {
    std::string input_path;
    std::string label_column = "label";
    std::string score_column = "score";
    std::optional<PriorPair> prior_override; // population priors for case-control samples
    WeightSpec weight = DefaultPriors{};
    ReportFormat format = ReportFormat::json;
    std::optional<double> at_threshold;
    std::optional<std::string> weight_svg_path;
    std::optional<std::string> roc_svg_path;
};

/// Full evaluation pipeline: ingest, priors, CDFs, ROC/hull, weight
/// resolution, all metrics, optional SVG outputs. Throws config_error,
/// io_error or data_error.
MetricReport run_eval(const EvalConfig& cfg);

} // namespace hmeasure
