#pragma once

#include <vector>

#include "hmeasure/score_data.hpp"

namespace hmeasure {

// One operating point: classify as class 1 when score > threshold.
struct RocPoint {
    double threshold; // may be +-infinity (sentinels)
    double f0;        // F0(threshold)
    double f1;        // F1(threshold)

    double fpr() const { return 1.0 - f0; }
    double tpr() const { return 1.0 - f1; }
};

// Points ordered by ascending threshold, one per CDF entry including the
// sentinels: first point is (FPR,TPR)=(1,1), last is (0,0).
struct RocCurve {
    std::vector<RocPoint> points;
};

// Upper convex hull of the ROC in (FPR, TPR) space: vertices from (0,0) to
// (1,1) by ascending FPR, slopes strictly decreasing, collinear interior
// points removed.
struct ConvexHull {
    std::vector<RocPoint> vertices;
};

RocCurve build_roc(const EmpiricalCdfs& cdfs);

ConvexHull upper_convex_hull(const RocCurve& r);

/// AUC by the pairwise definition with ties counted half:
/// [#(s0 < s1) + 0.5 * #(s0 = s1)] / (n0 * n1). O(n) on the sorted data.
double auc(const ScoreDataset& d);

/// Gini coefficient 2*AUC - 1.
double gini(const ScoreDataset& d);

/// Trapezoidal area under the hull vertices.
double auch(const ConvexHull& h);

/// Two-sample Kolmogorov-Smirnov statistic max_t (F0(t) - F1(t)).
double ks_statistic(const EmpiricalCdfs& cdfs);

} // namespace hmeasure
