#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hmeasure {

/// Labeled score sample for a two-class problem. Scores are kept sorted
/// ascending per class; both classes must be represented and finite.
class ScoreDataset {
public:
    ScoreDataset(std::vector<double> class0_scores, std::vector<double> class1_scores);

    const std::vector<double>& scores0() const { return scores0_; }
    const std::vector<double>& scores1() const { return scores1_; }
    std::size_t n0() const { return scores0_.size(); }
    std::size_t n1() const { return scores1_.size(); }

private:
    std::vector<double> scores0_;
    std::vector<double> scores1_;
};

/// Class proportions. pi0 and pi1 must be positive and sum to 1 within 1e-9.
struct PriorPair {
    double pi0;
    double pi1;

    PriorPair(double pi0_, double pi1_);
};

// Class-conditional empirical CDFs F_k(t) = P(s < t | class k), tabulated at
// every distinct observed score plus -inf/+inf sentinels. thresholds[0] is
// -inf with F=0, thresholds.back() is +inf with F=1; all arrays share length.
struct EmpiricalCdfs {
    std::vector<double> thresholds;
    std::vector<double> f0;
    std::vector<double> f1;
};

/// Read a labeled score file: comma-separated, UTF-8, one header row. The
/// label column must hold exactly 0 or 1; the score column a finite real.
/// Other columns are ignored. Throws io_error / data_error.
ScoreDataset ingest_csv(const std::string& path,
                        const std::string& label_column,
                        const std::string& score_column);

PriorPair empirical_priors(const ScoreDataset& d);

EmpiricalCdfs empirical_cdfs(const ScoreDataset& d);

} // namespace hmeasure
