#pragma once

#include "hmeasure/beta_weights.hpp"
#include "hmeasure/roc.hpp"
#include "hmeasure/score_data.hpp"

namespace hmeasure {

// Partition of the cost axis: vertices[i] is the loss-minimizing hull vertex
// for every c in (boundaries[i], boundaries[i+1]). Zero-width intervals are
// dropped, so boundaries.size() == vertices.size() + 1.
struct CostBreakpoints {
    std::vector<double> boundaries;
    std::vector<RocPoint> vertices;
};

struct HResult {
    double h;
    double expected_min_loss;
    double baseline_loss;
    BetaShape weight;
    CostBreakpoints breakpoints;
};

/// Expected misclassification loss of one operating point at cost c:
/// c*pi0*(1-F0) + (1-c)*pi1*F1.
double loss_at(double c, const RocPoint& t_point, const PriorPair& p);

/// Minimum of loss_at over the hull vertices (equals the minimum over all
/// ROC points).
double min_loss_at_cost(double c, const ConvexHull& hull, const PriorPair& p);

/// Cost intervals on which each hull vertex is optimal. Interior boundaries
/// sit where adjacent vertices tie: c = pi1*dF1 / (pi0*dF0 + pi1*dF1).
CostBreakpoints cost_breakpoints(const ConvexHull& hull, const PriorPair& p);

/// Integral of the per-cost minimum loss against the weight density, via the
/// breakpoint partition and closed-form Beta partial moments.
double expected_min_loss(const CostBreakpoints& bp, const PriorPair& p, const BetaShape& w);
double expected_min_loss(const ConvexHull& hull, const PriorPair& p, const BetaShape& w);

/// Expected loss of the pointwise-better trivial classifier: everything to
/// class 1 below c = pi1, everything to class 0 above.
double baseline_loss(const PriorPair& p, const BetaShape& w);

/// H = 1 - expected_min_loss / baseline_loss.
HResult h_measure(const ConvexHull& hull, const PriorPair& p, const BetaShape& w);
HResult h_measure(const ScoreDataset& d, const PriorPair& p, const BetaShape& w);

} // namespace hmeasure
