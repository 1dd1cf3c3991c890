#include "hmeasure/loss_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace hmeasure {

double loss_at(double c, const RocPoint& t_point, const PriorPair& p) {
    if (!(c >= 0.0) || !(c <= 1.0))
        throw std::invalid_argument("loss_at requires c in [0, 1]");
    return c * p.pi0 * (1.0 - t_point.f0) + (1.0 - c) * p.pi1 * t_point.f1;
}

double min_loss_at_cost(double c, const ConvexHull& hull, const PriorPair& p) {
    double best = loss_at(c, hull.vertices.front(), p);
    for (std::size_t i = 1; i < hull.vertices.size(); ++i)
        best = std::min(best, loss_at(c, hull.vertices[i], p));
    return best;
}

CostBreakpoints cost_breakpoints(const ConvexHull& hull, const PriorPair& p) {
    // Traverse vertices by ascending (F0, F1): from the all-class-1 corner
    // (F0=F1=0) to the all-class-0 corner (F0=F1=1), i.e. the stored
    // ascending-FPR order reversed.
    std::vector<RocPoint> v(hull.vertices.rbegin(), hull.vertices.rend());

    std::vector<double> bounds;
    bounds.reserve(v.size() + 1);
    bounds.push_back(0.0);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const double df0 = v[i + 1].f0 - v[i].f0;
        const double df1 = v[i + 1].f1 - v[i].f1;
        // Adjacent vertices tie in loss where c*pi0*dF0 = (1-c)*pi1*dF1.
        bounds.push_back(p.pi1 * df1 / (p.pi0 * df0 + p.pi1 * df1));
    }
    bounds.push_back(1.0);

    CostBreakpoints out;
    double cursor = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double hi = bounds[i + 1];
        if (!(hi > cursor))
            continue; // zero-width interval, or a rounding-induced inversion
        if (out.boundaries.empty())
            out.boundaries.push_back(cursor);
        out.boundaries.push_back(hi);
        out.vertices.push_back(v[i]);
        cursor = hi;
    }
    return out;
}

double expected_min_loss(const CostBreakpoints& bp, const PriorPair& p, const BetaShape& w) {
    double total = 0.0;
    for (std::size_t i = 0; i < bp.vertices.size(); ++i) {
        const RocPoint& v = bp.vertices[i];
        const double lo = bp.boundaries[i];
        const double hi = bp.boundaries[i + 1];
        total += p.pi0 * (1.0 - v.f0) * partial_moment_c(w, lo, hi) +
                 p.pi1 * v.f1 * partial_moment_1mc(w, lo, hi);
    }
    return total;
}

double expected_min_loss(const ConvexHull& hull, const PriorPair& p, const BetaShape& w) {
    return expected_min_loss(cost_breakpoints(hull, p), p, w);
}

double baseline_loss(const PriorPair& p, const BetaShape& w) {
    return p.pi0 * partial_moment_c(w, 0.0, p.pi1) +
           p.pi1 * partial_moment_1mc(w, p.pi1, 1.0);
}

HResult h_measure(const ConvexHull& hull, const PriorPair& p, const BetaShape& w) {
    CostBreakpoints bp = cost_breakpoints(hull, p);
    const double loss = expected_min_loss(bp, p, w);
    const double baseline = baseline_loss(p, w);
    return HResult{1.0 - loss / baseline, loss, baseline, w, std::move(bp)};
}

HResult h_measure(const ScoreDataset& d, const PriorPair& p, const BetaShape& w) {
    return h_measure(upper_convex_hull(build_roc(empirical_cdfs(d))), p, w);
}

} // namespace hmeasure
