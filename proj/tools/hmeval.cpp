// hmeval: evaluate a binary classifier's scores from a CSV file, reporting
// the H measure under a configurable Beta cost-weight distribution together
// with AUC, Gini, AUCH, KS, minimum error rate and threshold metrics.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmeasure/errors.hpp"
#include "hmeasure/eval.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitData = 4;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Binary classifier evaluation: H measure under Beta(alpha, beta) cost "
        "weights (default Beta(pi1+1, pi0+1)), AUC, Gini, AUCH, KS and "
        "threshold-level metrics."};

    std::string input_path;
    std::string label_column = "label";
    std::string score_column = "score";
    std::vector<double> prior_override;
    std::string format = "json";
    double at_threshold = 0.0;
    std::string weight_svg;
    std::string roc_svg;

    bool use_default = false;
    bool use_beta22 = false;
    bool use_legacy = false;
    double legacy_alpha = 2.0;
    double alpha = 0.0;
    double beta = 0.0;
    double mode_c = 0.0;
    double severity_ratio = 0.0;
    double k = 3.0;

    app.add_option("input", input_path, "CSV file with labeled scores")->required();
    app.add_option("--label-column", label_column, "Label column name (values 0/1)")
        ->capture_default_str();
    app.add_option("--score-column", score_column, "Score column name")
        ->capture_default_str();
    app.add_option("--priors", prior_override,
                   "Override class priors: PI0 PI1 (must sum to 1)")
        ->expected(2);

    auto* opt_default = app.add_flag("--default-weight", use_default,
                                     "Beta(pi1+1, pi0+1) weights (the default)");
    auto* opt_beta22 = app.add_flag("--beta22", use_beta22, "Beta(2, 2) weights");
    auto* opt_legacy = app.add_flag("--legacy-asymmetric", use_legacy,
                                    "Beta(a, 1+(a-1)*pi0/pi1) weights, a from --legacy-alpha");
    auto* opt_legacy_alpha = app.add_option("--legacy-alpha", legacy_alpha,
                                            "Alpha for --legacy-asymmetric (default 2)")
                                 ->capture_default_str();
    auto* opt_alpha = app.add_option("--alpha", alpha, "Explicit Beta shape alpha");
    auto* opt_beta = app.add_option("--beta", beta, "Explicit Beta shape beta");
    auto* opt_mode = app.add_option("--mode-c", mode_c,
                                    "Place the weight mode at this cost (with --k)");
    auto* opt_ratio = app.add_option(
        "--severity-ratio", severity_ratio,
        "Place the weight mode via the severity ratio r = c/(1-c) (with --k)");
    auto* opt_k = app.add_option("--k", k, "Concentration alpha+beta for --mode-c / "
                                           "--severity-ratio (default 3, must be >= 3)")
                      ->capture_default_str();

    opt_alpha->needs(opt_beta);
    opt_beta->needs(opt_alpha);
    opt_legacy_alpha->needs(opt_legacy);

    // The weight specification groups are mutually exclusive.
    std::vector<CLI::Option*> groups{opt_default, opt_beta22, opt_legacy, opt_alpha,
                                     opt_mode, opt_ratio};
    for (auto* a : groups)
        for (auto* b : groups)
            if (a != b)
                a->excludes(b);

    app.add_option("--format", format, "Report format: json or table")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "table"}));
    auto* opt_threshold = app.add_option(
        "--at-threshold", at_threshold, "Also report confusion counts and point "
                                        "metrics at this score threshold");
    app.add_option("--weight-svg", weight_svg,
                   "Write an SVG of the weight density (and its label-swapped "
                   "reflection) to this path");
    app.add_option("--roc-svg", roc_svg, "Write an SVG of the ROC curve and its "
                                         "convex hull to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        hmeasure::EvalConfig cfg;
        cfg.input_path = input_path;
        cfg.label_column = label_column;
        cfg.score_column = score_column;
        if (!prior_override.empty())
            cfg.prior_override = hmeasure::PriorPair(prior_override[0], prior_override[1]);

        if (*opt_k && !*opt_mode && !*opt_ratio)
            throw hmeasure::config_error("--k requires --mode-c or --severity-ratio");
        // resolution order: explicit shapes, mode, severity ratio, beta22,
        // legacy asymmetric, priors default
        if (*opt_alpha)
            cfg.weight = hmeasure::ExplicitShape{alpha, beta};
        else if (*opt_mode)
            cfg.weight = hmeasure::ModeK{mode_c, k};
        else if (*opt_ratio)
            cfg.weight = hmeasure::SeverityRatioK{severity_ratio, k};
        else if (use_beta22)
            cfg.weight = hmeasure::LegacyBeta22{};
        else if (use_legacy)
            cfg.weight = hmeasure::LegacyAsymmetric{legacy_alpha};
        else
            cfg.weight = hmeasure::DefaultPriors{};

        cfg.format = format == "table" ? hmeasure::ReportFormat::table
                                       : hmeasure::ReportFormat::json;
        if (*opt_threshold)
            cfg.at_threshold = at_threshold;
        if (!weight_svg.empty())
            cfg.weight_svg_path = weight_svg;
        if (!roc_svg.empty())
            cfg.roc_svg_path = roc_svg;

        const hmeasure::MetricReport rep = hmeasure::run_eval(cfg);
        std::cout << hmeasure::serialize_report(rep, cfg.format);
        return 0;
    } catch (const hmeasure::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hmeasure::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const hmeasure::data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
