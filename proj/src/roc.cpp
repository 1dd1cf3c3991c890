#include "hmeasure/roc.hpp"

#include <algorithm>
#include <cmath>

namespace hmeasure {

RocCurve build_roc(const EmpiricalCdfs& cdfs) {
    RocCurve curve;
    curve.points.reserve(cdfs.thresholds.size());
    for (std::size_t i = 0; i < cdfs.thresholds.size(); ++i)
        curve.points.push_back({cdfs.thresholds[i], cdfs.f0[i], cdfs.f1[i]});
    return curve;
}

namespace {

// Cross product of (a->b) x (a->c) in (FPR, TPR) coordinates.
double cross(const RocPoint& a, const RocPoint& b, const RocPoint& c) {
    return (b.fpr() - a.fpr()) * (c.tpr() - a.tpr()) -
           (b.tpr() - a.tpr()) * (c.fpr() - a.fpr());
}

} // namespace

ConvexHull upper_convex_hull(const RocCurve& r) {
    // Coordinates are ratios of small integer counts, so 1e-12 cleanly
    // separates genuine turns from collinearity noise.
    constexpr double collinear_tol = 1e-12;

    std::vector<RocPoint> pts = r.points;
    std::sort(pts.begin(), pts.end(), [](const RocPoint& a, const RocPoint& b) {
        if (a.fpr() != b.fpr()) return a.fpr() < b.fpr();
        return a.tpr() < b.tpr();
    });

    // Monotone chain, keeping only strict right turns: the concave majorant
    // from (0,0) to (1,1). Both corners are always present as sentinels.
    std::vector<RocPoint> hull;
    for (const RocPoint& p : pts) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull[hull.size() - 1], p) >= -collinear_tol)
            hull.pop_back();
        hull.push_back(p);
    }
    return ConvexHull{std::move(hull)};
}

double auc(const ScoreDataset& d) {
    const auto& s0 = d.scores0();
    const auto& s1 = d.scores1();

    // Merge the two sorted arrays by distinct value; each tie group
    // contributes (class-0 strictly below) * c1 full wins plus c0*c1 halves.
    // Kept in integers (doubled) so the result is exact.
    unsigned long long below0 = 0;
    unsigned long long numerator2 = 0;
    std::size_t i0 = 0;
    std::size_t i1 = 0;
    while (i0 < s0.size() || i1 < s1.size()) {
        double v;
        if (i0 == s0.size())
            v = s1[i1];
        else if (i1 == s1.size())
            v = s0[i0];
        else
            v = std::min(s0[i0], s1[i1]);

        unsigned long long c0 = 0;
        unsigned long long c1 = 0;
        while (i0 < s0.size() && s0[i0] == v) { ++i0; ++c0; }
        while (i1 < s1.size() && s1[i1] == v) { ++i1; ++c1; }

        numerator2 += (2ULL * below0 + c0) * c1;
        below0 += c0;
    }
    return static_cast<double>(numerator2) /
           (2.0 * static_cast<double>(d.n0()) * static_cast<double>(d.n1()));
}

double gini(const ScoreDataset& d) {
    return 2.0 * auc(d) - 1.0;
}

double auch(const ConvexHull& h) {
    double area = 0.0;
    for (std::size_t i = 1; i < h.vertices.size(); ++i) {
        const RocPoint& a = h.vertices[i - 1];
        const RocPoint& b = h.vertices[i];
        area += (b.fpr() - a.fpr()) * 0.5 * (a.tpr() + b.tpr());
    }
    return area;
}

double ks_statistic(const EmpiricalCdfs& cdfs) {
    double best = 0.0;
    for (std::size_t i = 0; i < cdfs.f0.size(); ++i)
        best = std::max(best, cdfs.f0[i] - cdfs.f1[i]);
    return best;
}

} // namespace hmeasure
