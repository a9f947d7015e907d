#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minviable/business_case.hpp"

namespace minviable {

/// One hypothetical model outcome: true-positive and false-positive counts.
/// False negatives and true negatives follow from the population sizes and
/// are never stored.
struct ConfusionPoint {
    double tp;
    double fp;
};

/// Net period payoff of a model outcome: tp * benefit - fp * cost.
inline double payoff(const BusinessCase& c, const ConfusionPoint& pt) {
    if (!(pt.tp >= 0.0 && pt.tp <= positive_cases(c)))
        throw std::domain_error("tp outside [0, N*r]");
    if (!(pt.fp >= 0.0 && pt.fp <= negative_cases(c)))
        throw std::domain_error("fp outside [0, N*(1-r)]");
    return pt.tp * c.tp_benefit - pt.fp * c.fp_cost;
}

/// True positives needed to reach the ROI target given fp false positives:
/// (fp * cost + roi) / benefit. The payoff at exactly this tp equals the
/// target.
inline double tp_required(const BusinessCase& c, double fp) {
    if (!(fp >= 0.0)) throw std::domain_error("fp must be non-negative");
    return (fp * c.fp_cost + c.min_roi) / c.tp_benefit;
}

/// False positives tolerable at a given tp: (tp * benefit - roi) / cost.
/// Requires tp * benefit >= roi, otherwise no non-negative fp works.
inline double fp_allowed(const BusinessCase& c, double tp) {
    if (!(tp >= 0.0)) throw std::domain_error("tp must be non-negative");
    if (tp * c.tp_benefit < c.min_roi)
        throw std::domain_error("tp insufficient for any viable fp");
    return (tp * c.tp_benefit - c.min_roi) / c.fp_cost;
}

/// Recall implied by a true-positive count: tp / (N * r).
inline double tpr_of(const BusinessCase& c, double tp) {
    if (!(tp >= 0.0 && tp <= positive_cases(c)))
        throw std::domain_error("tp outside [0, N*r]");
    return tp / positive_cases(c);
}

/// Fall-out implied by a false-positive count: fp / (N * (1-r)).
inline double fpr_of(const BusinessCase& c, double fp) {
    if (!(fp >= 0.0 && fp <= negative_cases(c)))
        throw std::domain_error("fp outside [0, N*(1-r)]");
    return fp / negative_cases(c);
}

/// Precision of a model that lands exactly on the ROI boundary with tp true
/// positives: 1 / (1 + benefit/cost - roi/(tp*cost)). Equals
/// tp / (tp + fp_allowed(tp)).
inline double precision_at_roi(const BusinessCase& c, double tp) {
    if (!(tp > 0.0)) throw std::domain_error("tp must be positive");
    if (tp * c.tp_benefit < c.min_roi)
        throw std::domain_error("tp insufficient for any viable fp");
    return 1.0 / (1.0 + c.tp_benefit / c.fp_cost -
                  c.min_roi / (tp * c.fp_cost));
}

/// Break-even precision: cost / (cost + benefit). Below this no threshold
/// can be net-positive, whatever the volume or base rate.
inline double precision_lower_bound(const BusinessCase& c) {
    return c.fp_cost / (c.fp_cost + c.tp_benefit);
}

/// Fraction of the (fp, tp) output rectangle [0, N*(1-r)] x [0, N*r] lying
/// on or above the viability line tp = (fp*cost + roi)/benefit.
///
/// The line enters the rectangle at tp = roi/benefit on the left edge and
/// climbs with slope cost/benefit. Three regimes:
///   - the entry point is at or above the top edge: nothing is viable;
///   - the line exits through the top edge: the viable region is a triangle
///     with height h = N*r - roi/benefit and width benefit*h/cost;
///   - the line exits through the right edge: the triangle is truncated and
///     the region is a trapezoid between the left- and right-edge heights.
inline double simplicity(const BusinessCase& c) {
    const double pos = positive_cases(c);
    const double neg = negative_cases(c);
    const double tp_entry = c.min_roi / c.tp_benefit;
    if (tp_entry >= pos) return 0.0;

    const double fp_exit = (pos * c.tp_benefit - c.min_roi) / c.fp_cost;
    double fraction;
    if (fp_exit <= neg) {
        const double h = pos - tp_entry;
        fraction = c.tp_benefit * h * h /
                   (2.0 * c.fp_cost * c.num_cases * c.num_cases *
                    c.base_rate * (1.0 - c.base_rate));
    } else {
        const double tp_right = (neg * c.fp_cost + c.min_roi) / c.tp_benefit;
        const double area = 0.5 * ((pos - tp_entry) + (pos - tp_right)) * neg;
        fraction = area / (pos * neg);
    }
    return std::clamp(fraction, 0.0, 1.0);
}

/// Enumeration oracle for simplicity: counts integer (tp, fp) lattice points
/// inside the output rectangle whose payoff meets the target. Kept
/// deliberately literal; it must stay independent of the closed form above.
inline double brute_force_viable_fraction(const BusinessCase& c) {
    const double pos_real = positive_cases(c);
    const double neg_real = negative_cases(c);
    if (pos_real > 1e4 || neg_real > 1e4)
        throw std::invalid_argument("population too large to enumerate");

    const long long tp_max = static_cast<long long>(std::floor(pos_real));
    const long long fp_max = static_cast<long long>(std::floor(neg_real));
    long long viable = 0;
    for (long long tp = 0; tp <= tp_max; ++tp) {
        const double gain = static_cast<double>(tp) * c.tp_benefit;
        if (gain < c.min_roi) continue;
        // Largest integer fp with tp*benefit - fp*cost >= roi. The division
        // seeds the estimate; the nudges keep the count consistent with the
        // payoff inequality itself at the boundary.
        long long fp = static_cast<long long>(
            std::floor((gain - c.min_roi) / c.fp_cost));
        while (fp + 1 <= fp_max &&
               gain - static_cast<double>(fp + 1) * c.fp_cost >= c.min_roi)
            ++fp;
        while (fp >= 0 &&
               gain - static_cast<double>(fp) * c.fp_cost < c.min_roi)
            --fp;
        if (fp < 0) continue;
        viable += std::min(fp, fp_max) + 1;
    }
    const double total = static_cast<double>(tp_max + 1) *
                         static_cast<double>(fp_max + 1);
    return static_cast<double>(viable) / total;
}

}  // namespace minviable
