#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace minviable {

/// The five global criteria that define one binary-classification business
/// problem for a single analysis period.
struct BusinessCase {
    double num_cases;   ///< events scored per period (N), real-valued estimate
    double base_rate;   ///< prevalence of the positive event, in (0, 1)
    double tp_benefit;  ///< currency gained per true positive
    double fp_cost;     ///< currency lost per false positive
    double min_roi;     ///< required net return per period, >= 0
};

/// Full 2x2 cost/benefit matrix. Benefits are positive, costs negative.
struct CostMatrix {
    double tp_value;
    double fp_value;
    double fn_value;
    double tn_value;
};

/// A business problem expressed through the three scale-free ratios plus the
/// case volume. Normalizing the required return to 1 makes problems directly
/// comparable.
struct RatioSpec {
    double benefit_to_roi;   ///< tp_benefit / min_roi, in (0, 1]
    double cost_to_benefit;  ///< fp_cost / tp_benefit, in (0, 1]
    double base_rate;        ///< in (0, 1)
    double num_cases;        ///< > 0
};

/// Expected positives per period: N * r.
inline double positive_cases(const BusinessCase& c) {
    return c.num_cases * c.base_rate;
}

/// Expected negatives per period: N * (1 - r).
inline double negative_cases(const BusinessCase& c) {
    return c.num_cases * (1.0 - c.base_rate);
}

/// Checks every invariant and returns the case unchanged. Throws
/// std::invalid_argument naming the offending field.
inline BusinessCase validate(const BusinessCase& c) {
    if (!std::isfinite(c.num_cases) || c.num_cases <= 0.0)
        throw std::invalid_argument("num_cases must be positive and finite");
    if (!(c.base_rate > 0.0 && c.base_rate < 1.0))
        throw std::invalid_argument("base_rate must lie in (0,1)");
    if (!std::isfinite(c.tp_benefit) || c.tp_benefit <= 0.0)
        throw std::invalid_argument("tp_benefit must be positive and finite");
    if (!std::isfinite(c.fp_cost) || c.fp_cost <= 0.0)
        throw std::invalid_argument("fp_cost must be positive and finite");
    if (!std::isfinite(c.min_roi) || c.min_roi < 0.0)
        throw std::invalid_argument("min_roi must be non-negative and finite");
    return c;
}

/// Payoff of running no model at all: every case is predicted negative, so
/// the period outcome is N*r pays fn_value plus N*(1-r) pays tn_value.
inline double cost_matrix_baseline(const CostMatrix& m, double num_cases,
                                   double base_rate) {
    return num_cases * base_rate * m.fn_value +
           num_cases * (1.0 - base_rate) * m.tn_value;
}

/// Reduces a full 2x2 matrix to the canonical benefit/cost form.
///
/// With fn = N*r - tp and tn = N*(1-r) - fp, the cell-wise payoff of any
/// confusion matrix equals
///
///     tp*(tp_value - fn_value) - fp*(tn_value - fp_value) + baseline
///
/// so the matrix collapses to an effective benefit, an effective cost, and a
/// constant already earned (or paid) by the status quo. The ROI target is
/// shifted by that constant and clamped at zero; a negative adjusted target
/// means the status quo alone clears it, which downstream reports as
/// trivially feasible.
inline BusinessCase reduce_cost_matrix(const CostMatrix& m, double num_cases,
                                       double base_rate, double min_roi) {
    if (!std::isfinite(m.tp_value) || !std::isfinite(m.fp_value) ||
        !std::isfinite(m.fn_value) || !std::isfinite(m.tn_value))
        throw std::invalid_argument("cost matrix cells must be finite");

    const double benefit = m.tp_value - m.fn_value;
    const double cost = m.tn_value - m.fp_value;
    if (benefit <= 0.0)
        throw std::invalid_argument(
            "effective benefit non-positive (tp_value - fn_value must be > 0)");
    if (cost <= 0.0)
        throw std::invalid_argument(
            "effective cost non-positive (tn_value - fp_value must be > 0)");

    const double baseline = cost_matrix_baseline(m, num_cases, base_rate);
    const double adjusted_roi = std::max(0.0, min_roi - baseline);
    return validate(BusinessCase{num_cases, base_rate, benefit, cost, adjusted_roi});
}

/// Builds the normalized case for a ratio triple: min_roi = 1, so tp_benefit
/// is the benefit-to-ROI ratio itself and fp_cost follows from the
/// cost-to-benefit ratio. Joint rescaling of (benefit, cost, roi) leaves
/// every downstream result unchanged, so this normalization is lossless.
inline BusinessCase case_from_ratios(const RatioSpec& spec) {
    if (!(spec.benefit_to_roi > 0.0 && spec.benefit_to_roi <= 1.0))
        throw std::invalid_argument("benefit_to_roi must lie in (0,1]");
    if (!(spec.cost_to_benefit > 0.0 && spec.cost_to_benefit <= 1.0))
        throw std::invalid_argument("cost_to_benefit must lie in (0,1]");
    if (!(spec.base_rate > 0.0 && spec.base_rate < 1.0))
        throw std::invalid_argument("base_rate must lie in (0,1)");
    if (!std::isfinite(spec.num_cases) || spec.num_cases <= 0.0)
        throw std::invalid_argument("num_cases must be positive and finite");

    const double roi = 1.0;
    const double benefit = spec.benefit_to_roi * roi;
    const double cost = spec.cost_to_benefit * benefit;
    return validate(
        BusinessCase{spec.num_cases, spec.base_rate, benefit, cost, roi});
}

}  // namespace minviable
