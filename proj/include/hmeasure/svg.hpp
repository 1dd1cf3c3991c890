#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hmeasure/beta_weights.hpp"
#include "hmeasure/roc.hpp"

namespace hmeasure {

/// Density samples (c, w(c)) on a midpoint grid c_i = (i + 0.5)/n, i < n.
/// The grid is symmetric under c -> 1-c, so reflected shapes sample to
/// mirrored values. These are exactly the points the SVG renderer plots.
std::vector<std::pair<double, double>> sample_density(const BetaShape& s, std::size_t n = 512);

/// Standalone SVG (fixed 800x600 viewport, 40 px margins) with one density
/// polyline per labeled shape, axes and a legend carrying alpha/beta.
void render_weight_density_svg(const std::vector<std::pair<std::string, BetaShape>>& shapes,
                               const std::string& path);

/// Unit-square ROC plot: diagonal reference, empirical ROC polyline, convex
/// hull overlay.
void render_roc_svg(const RocCurve& r, const ConvexHull& h, const std::string& path);

} // namespace hmeasure
