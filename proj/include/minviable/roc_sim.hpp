#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minviable/analytic_bounds.hpp"
#include "minviable/business_case.hpp"
#include "minviable/grid.hpp"

namespace minviable {

/// Two-parameter synthetic ROC family:
///
///     y(x) = alpha * (1 - (1-x)^(2*beta)) + (1-alpha) * x
///
/// alpha in [0,1] mixes the curved component with the diagonal; beta >= 0.5
/// keeps the curve above the diagonal. The base is written (1-x) so the
/// power is real-valued for fractional exponents; for even integer exponents
/// it coincides with the (x-1)^(2*beta) form.
struct RocCurve {
    double alpha;
    double beta;
};

inline RocCurve make_curve(double alpha, double beta) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0,1]");
    if (!(beta >= 0.5)) throw std::invalid_argument("beta must be >= 0.5");
    return RocCurve{alpha, beta};
}

/// One threshold's position on a curve together with the confusion counts
/// and payoff it implies for a particular case.
struct OperatingPoint {
    double fpr;
    double tpr;
    double tp;
    double fp;
    double payoff;
};

/// Search space for the minimum viable model: the beta grid to scan, the
/// number of threshold samples per curve, and the bisection tolerance on
/// alpha.
struct SearchConfig {
    std::vector<double> beta_grid;
    std::size_t thresholds = 1001;
    double alpha_tol = 1e-4;
};

/// Defaults: 60 log-spaced betas over [0.5, 100]. The upper bound is a
/// modeling guardrail; far beyond it the family degenerates into a spline of
/// two straight lines rather than a plausible ROC shape.
inline SearchConfig default_search_config() {
    return SearchConfig{log_spaced(0.5, 100.0, 60), 1001, 1e-4};
}

/// Outcome of the minimum-viable-model search. When no curve in the search
/// space meets the target the optional fields stay empty; infeasibility is a
/// result, not an error.
struct MinViableResult {
    bool feasible = false;
    std::optional<double> auc;
    std::optional<RocCurve> curve;
    std::optional<OperatingPoint> operating_point;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> fallout;
    double simplicity = 0.0;
    double precision_lower_bound = 0.0;
};

namespace detail {

/// Mixes the curved component (given its precomputed power term) with the
/// diagonal. Every evaluation path funnels through this one expression so
/// cached and uncached evaluations agree bit for bit.
inline double mix_eval(double alpha, double x, double pow_term) {
    return alpha * (1.0 - pow_term) + (1.0 - alpha) * x;
}

inline std::vector<double> threshold_grid(std::size_t thresholds) {
    if (thresholds < 2)
        throw std::invalid_argument("thresholds must be at least 2");
    std::vector<double> xs(thresholds);
    for (std::size_t i = 0; i < thresholds; ++i)
        xs[i] = static_cast<double>(i) / static_cast<double>(thresholds - 1);
    return xs;
}

inline std::vector<double> power_terms(const std::vector<double>& xs,
                                       double beta) {
    std::vector<double> p(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        p[i] = std::pow(1.0 - xs[i], 2.0 * beta);
    return p;
}

}  // namespace detail

/// Evaluates the curve at false-positive rate x.
inline double curve_eval(const RocCurve& c, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("x must lie in [0,1]");
    return detail::mix_eval(c.alpha, x, std::pow(1.0 - x, 2.0 * c.beta));
}

/// Closed-form area under the curve:
/// alpha * 2*beta/(2*beta + 1) + (1 - alpha)/2.
inline double curve_auc(const RocCurve& c) {
    return c.alpha * (2.0 * c.beta / (2.0 * c.beta + 1.0)) +
           (1.0 - c.alpha) * 0.5;
}

/// Trapezoidal AUC at `samples` uniform points; the numeric cross-check for
/// curve_auc.
inline double auc_numeric(const RocCurve& c, std::size_t samples) {
    const std::vector<double> xs = detail::threshold_grid(samples);
    double sum = 0.0;
    double prev = curve_eval(c, xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double cur = curve_eval(c, xs[i]);
        sum += 0.5 * (prev + cur) * (xs[i] - xs[i - 1]);
        prev = cur;
    }
    return sum;
}

/// Builds the operating point a case implies at (fpr, tpr).
inline OperatingPoint operating_point_at(const BusinessCase& c, double fpr,
                                         double tpr) {
    const double tp = tpr * positive_cases(c);
    const double fp = fpr * negative_cases(c);
    return OperatingPoint{fpr, tpr, tp, fp,
                          tp * c.tp_benefit - fp * c.fp_cost};
}

/// Scans `thresholds` uniform points on the curve and returns the
/// payoff-maximizing operating point; payoff ties go to the smaller fpr.
inline OperatingPoint best_operating_point(const BusinessCase& c,
                                           const RocCurve& curve,
                                           std::size_t thresholds) {
    const std::vector<double> xs = detail::threshold_grid(thresholds);
    OperatingPoint best = operating_point_at(c, xs[0], curve_eval(curve, xs[0]));
    for (std::size_t i = 1; i < xs.size(); ++i) {
        OperatingPoint pt = operating_point_at(c, xs[i], curve_eval(curve, xs[i]));
        if (pt.payoff > best.payoff) best = pt;
    }
    return best;
}

/// True iff some sampled threshold on the curve meets the ROI target, i.e.
/// the best operating point's payoff is at least min_roi.
inline bool is_viable(const BusinessCase& c, const RocCurve& curve,
                      std::size_t thresholds) {
    const std::vector<double> xs = detail::threshold_grid(thresholds);
    for (double x : xs) {
        const OperatingPoint pt = operating_point_at(c, x, curve_eval(curve, x));
        if (pt.payoff >= c.min_roi) return true;
    }
    return false;
}

namespace detail {

/// Viability of (alpha, beta) against precomputed power terms. Identical
/// arithmetic to is_viable, minus the repeated pow calls.
inline bool viable_with_terms(const BusinessCase& c, double alpha,
                              const std::vector<double>& xs,
                              const std::vector<double>& terms) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const OperatingPoint pt =
            operating_point_at(c, xs[i], mix_eval(alpha, xs[i], terms[i]));
        if (pt.payoff >= c.min_roi) return true;
    }
    return false;
}

inline std::optional<double> min_alpha_with_terms(
    const BusinessCase& c, const std::vector<double>& xs,
    const std::vector<double>& terms, double tol) {
    if (viable_with_terms(c, 0.0, xs, terms)) return 0.0;
    if (!viable_with_terms(c, 1.0, xs, terms)) return std::nullopt;
    double lo = 0.0;  // inviable
    double hi = 1.0;  // viable
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (viable_with_terms(c, mid, xs, terms))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace detail

/// Smallest alpha (within absolute tolerance tol) making (alpha, beta)
/// viable, or nullopt when even alpha = 1 fails. Viability is monotone in
/// alpha because the curve rises pointwise with it, so bisection is exact to
/// tolerance.
inline std::optional<double> min_viable_alpha(const BusinessCase& c,
                                              double beta,
                                              std::size_t thresholds,
                                              double tol) {
    if (!(beta >= 0.5)) throw std::invalid_argument("beta must be >= 0.5");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const std::vector<double> xs = detail::threshold_grid(thresholds);
    const std::vector<double> terms = detail::power_terms(xs, beta);
    return detail::min_alpha_with_terms(c, xs, terms, tol);
}

/// Searches the (alpha, beta) family for the viable curve of least AUC.
///
/// AUC rises with alpha at fixed beta, so the per-beta minimum is the
/// bisected minimum viable alpha; beta is not monotone and is gridded. Ties
/// in AUC break toward smaller beta, then smaller alpha, which keeps the
/// result independent of evaluation order.
inline MinViableResult find_min_viable_model(
    const BusinessCase& c, const SearchConfig& cfg = default_search_config()) {
    validate(c);
    if (cfg.beta_grid.empty())
        throw std::invalid_argument("beta grid must be non-empty");
    for (double b : cfg.beta_grid)
        if (!std::isfinite(b) || b < 0.5)
            throw std::invalid_argument("beta grid values must be >= 0.5");
    if (!(cfg.alpha_tol > 0.0))
        throw std::invalid_argument("alpha_tol must be positive");

    const std::vector<double> xs = detail::threshold_grid(cfg.thresholds);

    bool found = false;
    double best_auc = 0.0, best_alpha = 0.0, best_beta = 0.0;
    for (double beta : cfg.beta_grid) {
        const std::vector<double> terms = detail::power_terms(xs, beta);
        const std::optional<double> alpha =
            detail::min_alpha_with_terms(c, xs, terms, cfg.alpha_tol);
        if (!alpha) continue;
        const double auc = curve_auc(RocCurve{*alpha, beta});
        const bool better =
            !found || auc < best_auc ||
            (auc == best_auc &&
             (beta < best_beta || (beta == best_beta && *alpha < best_alpha)));
        if (better) {
            found = true;
            best_auc = auc;
            best_alpha = *alpha;
            best_beta = beta;
        }
    }

    MinViableResult result;
    result.simplicity = simplicity(c);
    result.precision_lower_bound = precision_lower_bound(c);
    if (!found) return result;

    const RocCurve curve{best_alpha, best_beta};
    const OperatingPoint pt = best_operating_point(c, curve, cfg.thresholds);
    result.feasible = true;
    result.auc = best_auc;
    result.curve = curve;
    result.operating_point = pt;
    const double predicted = pt.tp + pt.fp;
    result.precision = predicted > 0.0 ? pt.tp / predicted : 0.0;
    result.recall = pt.tpr;
    result.fallout = pt.fpr;
    return result;
}

}  // namespace minviable
