#include "hmeasure/threshold_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hmeasure {

ConfusionCounts confusion_at_threshold(const ScoreDataset& d, double t) {
    if (!std::isfinite(t))
        throw std::invalid_argument("confusion_at_threshold requires a finite threshold");
    const auto& s0 = d.scores0();
    const auto& s1 = d.scores1();
    const auto le1 = std::upper_bound(s1.begin(), s1.end(), t) - s1.begin();
    const auto le0 = std::upper_bound(s0.begin(), s0.end(), t) - s0.begin();
    ConfusionCounts c;
    c.tp = static_cast<std::int64_t>(s1.size()) - le1;
    c.fn = le1;
    c.fp = static_cast<std::int64_t>(s0.size()) - le0;
    c.tn = le0;
    return c;
}

namespace {

std::optional<double> ratio(std::int64_t num, std::int64_t den) {
    if (den == 0)
        return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace

PointMetrics point_metrics(const ConfusionCounts& c, const PriorPair& p) {
    PointMetrics m;
    const std::int64_t n1 = c.tp + c.fn;
    const std::int64_t n0 = c.fp + c.tn;

    m.sensitivity = ratio(c.tp, n1);
    m.specificity = ratio(c.tn, n0);
    m.ppv = ratio(c.tp, c.tp + c.fp);
    m.npv = ratio(c.tn, c.tn + c.fn);

    if (n0 > 0 && n1 > 0) {
        m.error_rate = p.pi0 * (static_cast<double>(c.fp) / static_cast<double>(n0)) +
                       p.pi1 * (static_cast<double>(c.fn) / static_cast<double>(n1));
        m.proportion_correct = 1.0 - *m.error_rate;
    }

    if (m.ppv && m.sensitivity && *m.ppv + *m.sensitivity > 0.0)
        m.f_measure = 2.0 * *m.ppv * *m.sensitivity / (*m.ppv + *m.sensitivity);

    return m;
}

MinErrorRate min_error_rate(const ScoreDataset& d, const PriorPair& p) {
    const EmpiricalCdfs cdfs = empirical_cdfs(d);
    MinErrorRate best{p.pi0 * (1.0 - cdfs.f0[0]) + p.pi1 * cdfs.f1[0], cdfs.thresholds[0]};
    for (std::size_t i = 1; i < cdfs.thresholds.size(); ++i) {
        const double er = p.pi0 * (1.0 - cdfs.f0[i]) + p.pi1 * cdfs.f1[i];
        if (er < best.error_rate) {
            best.error_rate = er;
            best.threshold = cdfs.thresholds[i];
        }
    }
    return best;
}

} // namespace hmeasure
