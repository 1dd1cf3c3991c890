#pragma once

#include <variant>

#include "hmeasure/score_data.hpp"

namespace hmeasure {

/// Shape parameters of a Beta(alpha, beta) cost-weight distribution.
/// Construction rejects non-positive parameters.
struct BetaShape {
    double alpha;
    double beta;

    BetaShape(double alpha_, double beta_);
};

/// ln B(alpha, beta). Accurate to ~1e-13 relative across arguments in
/// [1e-3, 1e6]; careful about the cancellation between lgamma terms that a
/// naive lgamma(a)+lgamma(b)-lgamma(a+b) suffers for large arguments.
double log_beta_function(double alpha, double beta);

/// Beta density w(c) on [0,1]. Endpoints with a negative exponent return
/// +infinity as a sentinel; integration never evaluates there.
double density(const BetaShape& s, double c);

/// Regularized incomplete beta I_x(alpha, beta), continued-fraction
/// evaluation (modified Lentz) with the symmetry switch at
/// x > (alpha+1)/(alpha+beta+2). Absolute error <= 1e-12.
double regularized_incomplete_beta(double x, double alpha, double beta);

/// Integral of c * w(c) over [a, b].
double partial_moment_c(const BetaShape& s, double a, double b);

/// Integral of (1 - c) * w(c) over [a, b].
double partial_moment_1mc(const BetaShape& s, double a, double b);

/// Mode (alpha-1)/(alpha+beta-2); requires alpha > 1 and beta > 1.
double mode(const BetaShape& s);

/// Shape with its mode at c_tilde and alpha+beta = k:
/// alpha = (k-2)*c_tilde + 1, beta = (k-2)*(1-c_tilde) + 1, for k >= 3.
BetaShape from_mode(double c_tilde, double k);

/// Place the mode via the severity ratio r = c/(1-c): mode at r/(1+r).
BetaShape from_severity_ratio(double r_tilde, double k);

/// The default cost-weight distribution Beta(pi1+1, pi0+1), i.e.
/// from_mode(pi1, 3).
BetaShape default_from_priors(const PriorPair& p);

/// Older asymmetric construction Beta(alpha, 1 + (alpha-1)*pi0/pi1) whose
/// mode is also pi1 but which is not label-swap symmetric. Default alpha 2
/// gives Beta(2, 1/pi1).
BetaShape legacy_asymmetric(const PriorPair& p, double alpha = 2.0);

/// Shape of 1-c when c ~ Beta(alpha, beta): parameter swap.
BetaShape reflect(const BetaShape& s);

// --- weight specification -------------------------------------------------

struct ExplicitShape {
    double alpha;
    double beta;
};

struct ModeK {
    double c_tilde;
    double k = 3.0;
};

struct SeverityRatioK {
    double r_tilde;
    double k = 3.0;
};

struct DefaultPriors {};

struct LegacyBeta22 {};

struct LegacyAsymmetric {
    double alpha = 2.0;
};

/// One of the supported ways to pick w(c); resolved against the priors in
/// use. Parameter validation happens at resolution time.
using WeightSpec = std::variant<DefaultPriors,
                                LegacyBeta22,
                                LegacyAsymmetric,
                                ExplicitShape,
                                ModeK,
                                SeverityRatioK>;

BetaShape resolve_weight(const WeightSpec& spec, const PriorPair& priors);

} // namespace hmeasure
