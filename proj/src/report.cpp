#include "hmeasure/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hmeasure {

namespace {

std::string fmt_number(double v) {
    // 12 significant digits, shortest form ("0.75" stays "0.75").
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_optional(const std::optional<double>& v) {
    return v ? fmt_number(*v) : "null";
}

void append_json_field(std::string& out, const char* name, const std::string& value,
                       bool last = false) {
    out += "  \"";
    out += name;
    out += "\": ";
    out += value;
    out += last ? "\n" : ",\n";
}

std::string to_json(const MetricReport& r) {
    std::string out = "{\n";
    append_json_field(out, "h", fmt_number(r.h));
    append_json_field(out, "auc", fmt_number(r.auc));
    append_json_field(out, "gini", fmt_number(r.gini));
    append_json_field(out, "auch", fmt_number(r.auch));
    append_json_field(out, "ks", fmt_number(r.ks));
    append_json_field(out, "mer", fmt_number(r.mer));
    append_json_field(out, "pi0", fmt_number(r.priors.pi0));
    append_json_field(out, "pi1", fmt_number(r.priors.pi1));
    append_json_field(out, "alpha", fmt_number(r.weight.alpha));
    append_json_field(out, "beta", fmt_number(r.weight.beta), !r.at_threshold.has_value());
    if (r.at_threshold) {
        const ThresholdReport& t = *r.at_threshold;
        append_json_field(out, "threshold", fmt_number(t.threshold));
        out += "  \"confusion\": {\"tp\": " + std::to_string(t.confusion.tp) +
               ", \"fp\": " + std::to_string(t.confusion.fp) +
               ", \"tn\": " + std::to_string(t.confusion.tn) +
               ", \"fn\": " + std::to_string(t.confusion.fn) + "},\n";
        out += "  \"point_metrics\": {";
        out += "\"sensitivity\": " + fmt_optional(t.metrics.sensitivity);
        out += ", \"specificity\": " + fmt_optional(t.metrics.specificity);
        out += ", \"ppv\": " + fmt_optional(t.metrics.ppv);
        out += ", \"npv\": " + fmt_optional(t.metrics.npv);
        out += ", \"proportion_correct\": " + fmt_optional(t.metrics.proportion_correct);
        out += ", \"error_rate\": " + fmt_optional(t.metrics.error_rate);
        out += ", \"f_measure\": " + fmt_optional(t.metrics.f_measure);
        out += "}\n";
    }
    out += "}\n";
    return out;
}

void append_row(std::string& out, const std::string& name, const std::string& value) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%-20s %s\n", name.c_str(), value.c_str());
    out += buf;
}

std::string fmt_threshold(double t) {
    if (std::isinf(t))
        return t < 0 ? "-inf" : "+inf";
    return fmt_number(t);
}

std::string to_table(const MetricReport& r) {
    std::string out;
    append_row(out, "h", fmt_number(r.h));
    append_row(out, "auc", fmt_number(r.auc));
    append_row(out, "gini", fmt_number(r.gini));
    append_row(out, "auch", fmt_number(r.auch));
    append_row(out, "ks", fmt_number(r.ks));
    append_row(out, "mer", fmt_number(r.mer));
    append_row(out, "mer_threshold", fmt_threshold(r.mer_threshold));
    append_row(out, "pi0", fmt_number(r.priors.pi0));
    append_row(out, "pi1", fmt_number(r.priors.pi1));
    append_row(out, "weight_alpha", fmt_number(r.weight.alpha));
    append_row(out, "weight_beta", fmt_number(r.weight.beta));
    append_row(out, "weight_mode", fmt_optional(r.weight_mode));
    append_row(out, "weight_k", fmt_number(r.weight_k));
    if (r.at_threshold) {
        const ThresholdReport& t = *r.at_threshold;
        append_row(out, "threshold", fmt_number(t.threshold));
        append_row(out, "tp", std::to_string(t.confusion.tp));
        append_row(out, "fp", std::to_string(t.confusion.fp));
        append_row(out, "tn", std::to_string(t.confusion.tn));
        append_row(out, "fn", std::to_string(t.confusion.fn));
        append_row(out, "sensitivity", fmt_optional(t.metrics.sensitivity));
        append_row(out, "specificity", fmt_optional(t.metrics.specificity));
        append_row(out, "ppv", fmt_optional(t.metrics.ppv));
        append_row(out, "npv", fmt_optional(t.metrics.npv));
        append_row(out, "proportion_correct", fmt_optional(t.metrics.proportion_correct));
        append_row(out, "error_rate", fmt_optional(t.metrics.error_rate));
        append_row(out, "f_measure", fmt_optional(t.metrics.f_measure));
    }
    return out;
}

} // namespace

std::string serialize_report(const MetricReport& rep, ReportFormat format) {
    return format == ReportFormat::json ? to_json(rep) : to_table(rep);
}

} // namespace hmeasure
