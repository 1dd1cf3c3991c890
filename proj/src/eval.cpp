#include "hmeasure/eval.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "hmeasure/errors.hpp"
#include "hmeasure/loss_engine.hpp"
#include "hmeasure/svg.hpp"
#include "hmeasure/threshold_metrics.hpp"

namespace hmeasure {

MetricReport run_eval(const EvalConfig& cfg) {
    if (cfg.at_threshold && !std::isfinite(*cfg.at_threshold))
        throw config_error("--at-threshold must be finite");

    const ScoreDataset data = ingest_csv(cfg.input_path, cfg.label_column, cfg.score_column);
    const PriorPair priors = cfg.prior_override ? *cfg.prior_override : empirical_priors(data);

    BetaShape weight(1.0, 1.0);
    try {
        weight = resolve_weight(cfg.weight, priors);
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("invalid weight specification: ") + e.what());
    }

    const EmpiricalCdfs cdfs = empirical_cdfs(data);
    const RocCurve curve = build_roc(cdfs);
    const ConvexHull hull = upper_convex_hull(curve);
    const HResult hres = h_measure(hull, priors, weight);
    const MinErrorRate mer = min_error_rate(data, priors);

    const double auc_value = auc(data);
    MetricReport rep{
        hres.h,
        auc_value,
        2.0 * auc_value - 1.0,
        auch(hull),
        ks_statistic(cdfs),
        mer.error_rate,
        mer.threshold,
        priors,
        weight,
        std::nullopt,
        weight.alpha + weight.beta,
        std::nullopt,
    };
    if (weight.alpha > 1.0 && weight.beta > 1.0)
        rep.weight_mode = mode(weight);

    if (cfg.at_threshold) {
        const ConfusionCounts counts = confusion_at_threshold(data, *cfg.at_threshold);
        rep.at_threshold = ThresholdReport{*cfg.at_threshold, counts,
                                           point_metrics(counts, priors)};
    }

    if (cfg.weight_svg_path)
        render_weight_density_svg({{"w(c)", weight}, {"label-swapped", reflect(weight)}},
                                  *cfg.weight_svg_path);
    if (cfg.roc_svg_path)
        render_roc_svg(curve, hull, *cfg.roc_svg_path);

    return rep;
}

} // namespace hmeasure
