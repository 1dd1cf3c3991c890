#include "hmeasure/beta_weights.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace hmeasure {

BetaShape::BetaShape(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("Beta shape parameters must be positive");
}

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178; // 0.5 * ln(2*pi)

// Stirling remainder lgamma(x) - [(x - 0.5) ln x - x + 0.5 ln(2 pi)],
// asymptotic series good to full double precision for x >= 15.
double stirling_delta(double x) {
    const double r = 1.0 / x;
    const double r2 = r * r;
    return r *
           (1.0 / 12.0 +
            r2 * (-1.0 / 360.0 +
                  r2 * (1.0 / 1260.0 +
                        r2 * (-1.0 / 1680.0 +
                              r2 * (1.0 / 1188.0 + r2 * (-691.0 / 360360.0))))));
}

} // namespace

double log_beta_function(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("log_beta_function requires positive arguments");

    double a = std::min(alpha, beta);
    double b = std::max(alpha, beta);

    // B(1, b) = 1/b exactly.
    if (a == 1.0)
        return -std::log(b);
    if (b == 1.0)
        return -std::log(a);

    // Composing lgamma values directly loses up to ~6 digits for large
    // arguments (three O(1e7) terms cancelling to O(10)). Raise both
    // arguments into Stirling territory by the recurrence
    // ln B(a, b) = ln B(a+1, b) - ln(a/(a+b)), then use the Stirling form in
    // which only the small delta terms and well-conditioned logs remain.
    if (b < 15.0) {
        double corr = 0.0;
        while (a < 15.0) {
            corr += std::log(a / (a + b));
            a += 1.0;
        }
        while (b < 15.0) {
            corr += std::log(b / (a + b));
            b += 1.0;
        }
        return log_beta_function(a, b) - corr;
    }
    if (a < 15.0) {
        double corr = 0.0;
        while (a < 15.0) {
            corr += std::log(a / (a + b));
            a += 1.0;
        }
        return log_beta_function(a, b) - corr;
    }

    // a, b >= 15:
    // ln B = 0.5 ln(2 pi) - 0.5 ln(a+b) + d(a) + d(b) - d(a+b)
    //        + (a - 0.5) ln(a/(a+b)) + (b - 0.5) ln(b/(a+b))
    const double sum = a + b;
    const double d = stirling_delta(a) + stirling_delta(b) - stirling_delta(sum);
    // b is the larger argument: evaluate its log term via log1p to keep the
    // (b - 0.5) * ln(b/(a+b)) product fully accurate when a << b.
    const double log_small = std::log(a / sum);
    const double log_large = -std::log1p(a / b);
    return kHalfLog2Pi - 0.5 * std::log(sum) + d + (a - 0.5) * log_small +
           (b - 0.5) * log_large;
}

double density(const BetaShape& s, double c) {
    if (!(c >= 0.0) || !(c <= 1.0))
        throw std::invalid_argument("density argument must lie in [0, 1]");
    const double a = s.alpha;
    const double b = s.beta;
    if (c == 0.0) {
        if (a < 1.0) return std::numeric_limits<double>::infinity();
        if (a > 1.0) return 0.0;
        return std::exp(-log_beta_function(a, b));
    }
    if (c == 1.0) {
        if (b < 1.0) return std::numeric_limits<double>::infinity();
        if (b > 1.0) return 0.0;
        return std::exp(-log_beta_function(a, b));
    }
    return std::exp((a - 1.0) * std::log(c) + (b - 1.0) * std::log1p(-c) -
                    log_beta_function(a, b));
}

namespace {

// Continued fraction for I_x(a, b), modified Lentz. Converges in far fewer
// than 300 iterations for x below the symmetry switch point.
double beta_continued_fraction(double x, double a, double b) {
    constexpr int max_iterations = 300;
    constexpr double eps = 1e-15;
    constexpr double tiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= max_iterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps)
            break;
    }
    return h;
}

} // namespace

double regularized_incomplete_beta(double x, double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("regularized_incomplete_beta requires positive shapes");
    if (!(x >= 0.0) || !(x <= 1.0))
        throw std::invalid_argument("regularized_incomplete_beta requires x in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double log_prefix = alpha * std::log(x) + beta * std::log1p(-x) -
                              log_beta_function(alpha, beta);
    if (x < (alpha + 1.0) / (alpha + beta + 2.0))
        return std::exp(log_prefix) * beta_continued_fraction(x, alpha, beta) / alpha;
    return 1.0 - std::exp(log_prefix) * beta_continued_fraction(1.0 - x, beta, alpha) / beta;
}

double partial_moment_c(const BetaShape& s, double a, double b) {
    if (!(a >= 0.0) || !(b <= 1.0) || a > b)
        throw std::invalid_argument("partial_moment_c requires 0 <= a <= b <= 1");
    if (a == b) return 0.0;
    const double mean = s.alpha / (s.alpha + s.beta);
    return mean * (regularized_incomplete_beta(b, s.alpha + 1.0, s.beta) -
                   regularized_incomplete_beta(a, s.alpha + 1.0, s.beta));
}

double partial_moment_1mc(const BetaShape& s, double a, double b) {
    if (!(a >= 0.0) || !(b <= 1.0) || a > b)
        throw std::invalid_argument("partial_moment_1mc requires 0 <= a <= b <= 1");
    if (a == b) return 0.0;
    const double complement_mean = s.beta / (s.alpha + s.beta);
    return complement_mean * (regularized_incomplete_beta(b, s.alpha, s.beta + 1.0) -
                              regularized_incomplete_beta(a, s.alpha, s.beta + 1.0));
}

double mode(const BetaShape& s) {
    // The closed form presumes an interior mode; refuse boundary cases
    // rather than clamping.
    if (!(s.alpha > 1.0) || !(s.beta > 1.0))
        throw std::domain_error("mode requires alpha > 1 and beta > 1");
    return (s.alpha - 1.0) / (s.alpha + s.beta - 2.0);
}

BetaShape from_mode(double c_tilde, double k) {
    if (!(c_tilde > 0.0) || !(c_tilde < 1.0))
        throw std::invalid_argument("from_mode requires c_tilde in (0, 1)");
    if (!(k >= 3.0))
        throw std::invalid_argument("from_mode requires k >= 3");
    return BetaShape((k - 2.0) * c_tilde + 1.0, (k - 2.0) * (1.0 - c_tilde) + 1.0);
}

BetaShape from_severity_ratio(double r_tilde, double k) {
    if (!(r_tilde > 0.0))
        throw std::invalid_argument("from_severity_ratio requires r_tilde > 0");
    return from_mode(r_tilde / (1.0 + r_tilde), k);
}

BetaShape default_from_priors(const PriorPair& p) {
    return from_mode(p.pi1, 3.0);
}

BetaShape legacy_asymmetric(const PriorPair& p, double alpha) {
    if (!(alpha > 1.0))
        throw std::invalid_argument("legacy_asymmetric requires alpha > 1");
    return BetaShape(alpha, 1.0 + (alpha - 1.0) * p.pi0 / p.pi1);
}

BetaShape reflect(const BetaShape& s) {
    return BetaShape(s.beta, s.alpha);
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

BetaShape resolve_weight(const WeightSpec& spec, const PriorPair& priors) {
    return std::visit(
        overloaded{
            [&](const DefaultPriors&) { return default_from_priors(priors); },
            [](const LegacyBeta22&) { return BetaShape(2.0, 2.0); },
            [&](const LegacyAsymmetric& w) { return legacy_asymmetric(priors, w.alpha); },
            [](const ExplicitShape& w) { return BetaShape(w.alpha, w.beta); },
            [](const ModeK& w) { return from_mode(w.c_tilde, w.k); },
            [](const SeverityRatioK& w) { return from_severity_ratio(w.r_tilde, w.k); },
        },
        spec);
}

} // namespace hmeasure
