#include "hmeasure/score_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string_view>

#include "hmeasure/errors.hpp"

namespace hmeasure {

ScoreDataset::ScoreDataset(std::vector<double> class0_scores, std::vector<double> class1_scores)
    : scores0_(std::move(class0_scores)), scores1_(std::move(class1_scores)) {
    if (scores0_.empty())
        throw data_error("class 0 empty: both classes must be represented");
    if (scores1_.empty())
        throw data_error("class 1 empty: both classes must be represented");
    for (const auto* v : {&scores0_, &scores1_})
        for (double s : *v)
            if (!std::isfinite(s))
                throw data_error("non-finite score in dataset");
    std::sort(scores0_.begin(), scores0_.end());
    std::sort(scores1_.begin(), scores1_.end());
}

PriorPair::PriorPair(double pi0_, double pi1_) : pi0(pi0_), pi1(pi1_) {
    if (!(pi0 > 0.0) || !(pi1 > 0.0))
        throw std::invalid_argument("priors must be positive");
    if (std::abs(pi0 + pi1 - 1.0) > 1e-9)
        throw std::invalid_argument("priors must sum to 1 within 1e-9");
}

namespace {

// Splits one CSV line on commas. No quoting: the format is plain
// comma-separated fields with a single header row.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

ScoreDataset ingest_csv(const std::string& path,
                        const std::string& label_column,
                        const std::string& score_column) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open input file: " + path);

    std::string line;
    if (!std::getline(in, line))
        throw data_error("empty file: " + path);

    // Strip a UTF-8 BOM if present.
    if (line.rfind("\xEF\xBB\xBF", 0) == 0)
        line.erase(0, 3);

    std::size_t label_idx = std::string::npos;
    std::size_t score_idx = std::string::npos;
    {
        auto header = split_fields(line);
        for (std::size_t i = 0; i < header.size(); ++i) {
            auto name = trim(header[i]);
            if (name == label_column) label_idx = i;
            if (name == score_column) score_idx = i;
        }
    }
    if (label_idx == std::string::npos)
        throw data_error("label column '" + label_column + "' not found in header");
    if (score_idx == std::string::npos)
        throw data_error("score column '" + score_column + "' not found in header");

    std::vector<double> s0;
    std::vector<double> s1;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty())
            continue;
        auto fields = split_fields(line);
        std::size_t needed = std::max(label_idx, score_idx);
        if (fields.size() <= needed)
            throw data_error("row " + std::to_string(row) + ": too few fields");

        auto label = trim(fields[label_idx]);
        bool is_one = (label == "1");
        if (!is_one && label != "0")
            throw data_error("row " + std::to_string(row) + ": label must be 0 or 1, got '" +
                             std::string(label) + "'");

        auto raw = trim(fields[score_idx]);
        double score = 0.0;
        auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), score);
        if (ec != std::errc{} || ptr != raw.data() + raw.size() || !std::isfinite(score))
            throw data_error("row " + std::to_string(row) + ": score '" + std::string(raw) +
                             "' is not a finite number");

        (is_one ? s1 : s0).push_back(score);
    }

    return ScoreDataset(std::move(s0), std::move(s1));
}

PriorPair empirical_priors(const ScoreDataset& d) {
    double n = static_cast<double>(d.n0() + d.n1());
    return PriorPair(static_cast<double>(d.n0()) / n, static_cast<double>(d.n1()) / n);
}

EmpiricalCdfs empirical_cdfs(const ScoreDataset& d) {
    const auto& s0 = d.scores0();
    const auto& s1 = d.scores1();
    const double n0 = static_cast<double>(d.n0());
    const double n1 = static_cast<double>(d.n1());
    constexpr double inf = std::numeric_limits<double>::infinity();

    EmpiricalCdfs out;
    out.thresholds.reserve(s0.size() + s1.size() + 2);
    out.f0.reserve(s0.size() + s1.size() + 2);
    out.f1.reserve(s0.size() + s1.size() + 2);

    out.thresholds.push_back(-inf);
    out.f0.push_back(0.0);
    out.f1.push_back(0.0);

    // Walk the merged distinct score values; everything consumed so far is
    // strictly below the current value, which is exactly F_k(t) = P(s < t).
    std::size_t i0 = 0;
    std::size_t i1 = 0;
    while (i0 < s0.size() || i1 < s1.size()) {
        double t;
        if (i0 == s0.size())
            t = s1[i1];
        else if (i1 == s1.size())
            t = s0[i0];
        else
            t = std::min(s0[i0], s1[i1]);

        out.thresholds.push_back(t);
        out.f0.push_back(static_cast<double>(i0) / n0);
        out.f1.push_back(static_cast<double>(i1) / n1);

        while (i0 < s0.size() && s0[i0] == t) ++i0;
        while (i1 < s1.size() && s1[i1] == t) ++i1;
    }

    out.thresholds.push_back(inf);
    out.f0.push_back(1.0);
    out.f1.push_back(1.0);
    return out;
}

} // namespace hmeasure
