#pragma once

#include <cstdint>
#include <optional>

#include "hmeasure/score_data.hpp"

namespace hmeasure {

struct ConfusionCounts {
    std::int64_t tp;
    std::int64_t fp;
    std::int64_t tn;
    std::int64_t fn;
};

// Ratio metrics carry an explicit "undefined" state (empty optional) when a
// denominator is zero; they are never silently reported as 0.
struct PointMetrics {
    std::optional<double> sensitivity;
    std::optional<double> specificity;
    std::optional<double> ppv;
    std::optional<double> npv;
    std::optional<double> proportion_correct;
    std::optional<double> error_rate;
    std::optional<double> f_measure;
};

struct MinErrorRate {
    double error_rate;
    double threshold; // smallest achieving threshold; may be -infinity
};

/// Counts for the rule "score > t is class 1". t must be finite.
ConfusionCounts confusion_at_threshold(const ScoreDataset& d, double t);

/// Derived metrics; error_rate is prior-weighted pi0*(fp/n0) + pi1*(fn/n1),
/// which reduces to (fp+fn)/n under empirical priors.
PointMetrics point_metrics(const ConfusionCounts& c, const PriorPair& p);

/// min_t pi0*(1 - F0(t)) + pi1*F1(t) over all operating points, ties broken
/// toward the smallest threshold.
MinErrorRate min_error_rate(const ScoreDataset& d, const PriorPair& p);

} // namespace hmeasure
