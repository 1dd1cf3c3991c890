#include "hmeasure/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "hmeasure/errors.hpp"

namespace hmeasure {

std::vector<std::pair<double, double>> sample_density(const BetaShape& s, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("sample_density requires n > 0");
    std::vector<std::pair<double, double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Midpoint grid: interior only (endpoint densities may be infinite)
        // and symmetric under c -> 1-c.
        const double c = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        out.emplace_back(c, density(s, c));
    }
    return out;
}

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 40.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct Scale {
    double x0, x1; // data range on x
    double y0, y1; // data range on y

    double px(double x) const {
        return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2.0 * kMargin);
    }
    double py(double y) const {
        return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2.0 * kMargin);
    }
};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string short_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::ofstream open_svg(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write SVG file: " + path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n"
        << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    return out;
}

void close_svg(std::ofstream& out, const std::string& path) {
    out << "</svg>\n";
    out.flush();
    if (!out)
        throw io_error("failed writing SVG file: " + path);
}

void draw_frame(std::ofstream& out, const Scale& sc, const std::string& x_title,
                const std::string& y_title, int x_ticks, int y_ticks) {
    out << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
        << num(kWidth - 2 * kMargin) << "\" height=\"" << num(kHeight - 2 * kMargin)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= x_ticks; ++i) {
        const double x = sc.x0 + (sc.x1 - sc.x0) * i / x_ticks;
        out << "<line x1=\"" << num(sc.px(x)) << "\" y1=\"" << num(kHeight - kMargin)
            << "\" x2=\"" << num(sc.px(x)) << "\" y2=\"" << num(kHeight - kMargin + 5)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(sc.px(x)) << "\" y=\"" << num(kHeight - kMargin + 18)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << short_num(x) << "</text>\n";
    }
    for (int i = 0; i <= y_ticks; ++i) {
        const double y = sc.y0 + (sc.y1 - sc.y0) * i / y_ticks;
        out << "<line x1=\"" << num(kMargin - 5) << "\" y1=\"" << num(sc.py(y))
            << "\" x2=\"" << num(kMargin) << "\" y2=\"" << num(sc.py(y))
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(kMargin - 8) << "\" y=\"" << num(sc.py(y) + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << short_num(y) << "</text>\n";
    }
    out << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 8)
        << "\" font-size=\"14\" text-anchor=\"middle\">" << x_title << "</text>\n";
    out << "<text x=\"14\" y=\"" << num(kHeight / 2)
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << num(kHeight / 2) << ")\">" << y_title << "</text>\n";
}

void draw_polyline(std::ofstream& out, const Scale& sc,
                   const std::vector<std::pair<double, double>>& pts, const char* color,
                   const char* klass, const char* dash = nullptr) {
    out << "<polyline class=\"" << klass << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"";
    if (dash)
        out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << num(sc.px(pts[i].first)) << ',' << num(sc.py(pts[i].second));
    }
    out << "\"/>\n";
}

} // namespace

void render_weight_density_svg(const std::vector<std::pair<std::string, BetaShape>>& shapes,
                               const std::string& path) {
    if (shapes.empty())
        throw std::invalid_argument("render_weight_density_svg requires at least one shape");

    constexpr std::size_t kSamples = 512;
    std::vector<std::vector<std::pair<double, double>>> curves;
    curves.reserve(shapes.size());
    double y_max = 0.0;
    for (const auto& [label, shape] : shapes) {
        curves.push_back(sample_density(shape, kSamples));
        for (const auto& [c, w] : curves.back())
            y_max = std::max(y_max, w);
    }
    if (y_max <= 0.0)
        y_max = 1.0;

    Scale sc{0.0, 1.0, 0.0, y_max * 1.05};
    std::ofstream out = open_svg(path);
    draw_frame(out, sc, "c", "w(c)", 4, 4);
    for (std::size_t i = 0; i < curves.size(); ++i)
        draw_polyline(out, sc, curves[i], kPalette[i % kPaletteSize], "density");

    // Legend, top right of the plot area.
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const double ly = kMargin + 18.0 + 18.0 * static_cast<double>(i);
        out << "<line x1=\"" << num(kWidth - kMargin - 220) << "\" y1=\"" << num(ly - 4)
            << "\" x2=\"" << num(kWidth - kMargin - 196) << "\" y2=\"" << num(ly - 4)
            << "\" stroke=\"" << kPalette[i % kPaletteSize] << "\" stroke-width=\"1.5\"/>\n";
        out << "<text x=\"" << num(kWidth - kMargin - 190) << "\" y=\"" << num(ly)
            << "\" font-size=\"12\">" << shapes[i].first << " Beta("
            << short_num(shapes[i].second.alpha) << ", " << short_num(shapes[i].second.beta)
            << ")</text>\n";
    }
    close_svg(out, path);
}

void render_roc_svg(const RocCurve& r, const ConvexHull& h, const std::string& path) {
    Scale sc{0.0, 1.0, 0.0, 1.0};
    std::ofstream out = open_svg(path);
    draw_frame(out, sc, "FPR", "TPR", 4, 4);

    draw_polyline(out, sc, {{0.0, 0.0}, {1.0, 1.0}}, "#999999", "diagonal", "6,4");

    std::vector<std::pair<double, double>> roc_pts;
    roc_pts.reserve(r.points.size());
    for (const RocPoint& p : r.points)
        roc_pts.emplace_back(p.fpr(), p.tpr());
    draw_polyline(out, sc, roc_pts, kPalette[0], "roc");

    std::vector<std::pair<double, double>> hull_pts;
    hull_pts.reserve(h.vertices.size());
    for (const RocPoint& p : h.vertices)
        hull_pts.emplace_back(p.fpr(), p.tpr());
    draw_polyline(out, sc, hull_pts, kPalette[1], "hull");
    for (const auto& [x, y] : hull_pts)
        out << "<circle cx=\"" << num(sc.px(x)) << "\" cy=\"" << num(sc.py(y))
            << "\" r=\"3\" fill=\"" << kPalette[1] << "\"/>\n";

    close_svg(out, path);
}

} // namespace hmeasure
