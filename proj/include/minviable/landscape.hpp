#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "minviable/business_case.hpp"
#include "minviable/grid.hpp"
#include "minviable/roc_sim.hpp"

namespace minviable {

/// Required AUC assigned to a problem no curve in the search family can
/// solve. It caps the achievable family (whose AUC stays below 1), so
/// censoring at it keeps aggregates and surfaces monotone across the
/// feasibility boundary.
inline constexpr double kInfeasibleAuc = 1.0;

enum class SweepDimension { benefit_to_roi, cost_to_benefit, base_rate };

struct RatioInterval {
    double lo;
    double hi;
};

/// Sampling ranges for the ratios that are not being swept. Log-uniform
/// draws over these intervals stand in for "the space of business problems".
struct BackgroundRanges {
    RatioInterval benefit_to_roi{1e-6, 1.0};
    RatioInterval cost_to_benefit{1e-3, 1.0};
    RatioInterval base_rate{1e-5, 0.5};
};

struct SweepSpec {
    SweepDimension dimension = SweepDimension::base_rate;
    std::vector<double> grid;
    std::size_t background_samples = 200;
    double num_cases = 1e6;
    std::uint64_t seed = 0;
};

/// Aggregated difficulty at one grid value of the swept dimension.
/// Statistics cover every background sample, with infeasible draws censored
/// at kInfeasibleAuc; infeasible_fraction reports how many were censored.
struct SweepRow {
    double dim_value = 0.0;
    double mean_auc = 0.0;
    double q1_auc = 0.0;
    double q3_auc = 0.0;
    double infeasible_fraction = 0.0;
};

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits; identical on every
/// platform, unlike std::uniform_real_distribution.
inline double next_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double log_uniform(std::mt19937_64& gen, const RatioInterval& iv) {
    const double u = next_unit(gen);
    return std::exp(std::log(iv.lo) + u * (std::log(iv.hi) - std::log(iv.lo)));
}

inline void check_interval(const RatioInterval& iv, const char* name) {
    if (!(iv.lo > 0.0) || !(iv.hi >= iv.lo))
        throw std::invalid_argument(std::string(name) +
                                    " range must satisfy 0 < lo <= hi");
}

}  // namespace detail

inline void validate(const SweepSpec& spec) {
    if (spec.grid.empty())
        throw std::invalid_argument("sweep grid must be non-empty");
    for (double v : spec.grid) {
        const bool ok = spec.dimension == SweepDimension::base_rate
                            ? (v > 0.0 && v < 1.0)
                            : (v > 0.0 && v <= 1.0);
        if (!ok)
            throw std::invalid_argument("sweep grid value outside legal range");
    }
    if (spec.background_samples == 0)
        throw std::invalid_argument("background_samples must be positive");
    if (!std::isfinite(spec.num_cases) || spec.num_cases <= 0.0)
        throw std::invalid_argument("num_cases must be positive and finite");
}

/// Difficulty trend along one ratio dimension.
///
/// The generator restarts from the same seed at every grid value, so all
/// grid values see the same background draws (common random numbers). Each
/// sample's censored min AUC is then monotone in the swept dimension, which
/// makes the mean and quartile columns monotone as well rather than hostage
/// to which samples happen to be feasible where.
inline std::vector<SweepRow> sweep(
    const SweepSpec& spec,
    const SearchConfig& search = default_search_config(),
    const BackgroundRanges& ranges = BackgroundRanges{}) {
    validate(spec);
    detail::check_interval(ranges.benefit_to_roi, "benefit_to_roi");
    detail::check_interval(ranges.cost_to_benefit, "cost_to_benefit");
    detail::check_interval(ranges.base_rate, "base_rate");

    std::vector<SweepRow> rows;
    rows.reserve(spec.grid.size());
    for (double value : spec.grid) {
        std::mt19937_64 gen(spec.seed);
        std::vector<double> aucs;
        aucs.reserve(spec.background_samples);
        std::size_t infeasible = 0;
        for (std::size_t s = 0; s < spec.background_samples; ++s) {
            RatioSpec rs;
            rs.num_cases = spec.num_cases;
            // Draw the non-swept ratios in a fixed order so the stream of
            // random numbers is independent of the swept dimension's value.
            rs.benefit_to_roi =
                spec.dimension == SweepDimension::benefit_to_roi
                    ? value
                    : detail::log_uniform(gen, ranges.benefit_to_roi);
            rs.cost_to_benefit =
                spec.dimension == SweepDimension::cost_to_benefit
                    ? value
                    : detail::log_uniform(gen, ranges.cost_to_benefit);
            rs.base_rate = spec.dimension == SweepDimension::base_rate
                               ? value
                               : detail::log_uniform(gen, ranges.base_rate);
            const MinViableResult res =
                find_min_viable_model(case_from_ratios(rs), search);
            if (res.feasible) {
                aucs.push_back(*res.auc);
            } else {
                aucs.push_back(kInfeasibleAuc);
                ++infeasible;
            }
        }
        double sum = 0.0;
        for (double a : aucs) sum += a;
        std::sort(aucs.begin(), aucs.end());
        SweepRow row;
        row.dim_value = value;
        row.mean_auc = sum / static_cast<double>(aucs.size());
        row.q1_auc = quantile_sorted(aucs, 0.25);
        row.q3_auc = quantile_sorted(aucs, 0.75);
        row.infeasible_fraction = static_cast<double>(infeasible) /
                                  static_cast<double>(spec.background_samples);
        rows.push_back(row);
    }
    return rows;
}

/// Minimum viable AUC over a base-rate x cost-to-benefit grid at one fixed
/// benefit-to-ROI ratio. Infeasible cells carry kInfeasibleAuc in min_auc
/// and false in the feasible mask.
struct SurfaceResult {
    double benefit_to_roi = 0.0;
    double num_cases = 0.0;
    std::vector<double> base_rates;
    std::vector<double> cost_to_benefit;
    std::vector<std::vector<double>> min_auc;  ///< [base rate][cost/benefit]
    std::vector<std::vector<bool>> feasible;
};

inline SurfaceResult surface(
    double benefit_to_roi, const std::vector<double>& base_rate_grid,
    const std::vector<double>& cost_to_benefit_grid, double num_cases,
    const SearchConfig& search = default_search_config()) {
    if (base_rate_grid.empty() || cost_to_benefit_grid.empty())
        throw std::invalid_argument("surface grids must be non-empty");

    SurfaceResult out;
    out.benefit_to_roi = benefit_to_roi;
    out.num_cases = num_cases;
    out.base_rates = base_rate_grid;
    out.cost_to_benefit = cost_to_benefit_grid;
    out.min_auc.resize(base_rate_grid.size());
    out.feasible.resize(base_rate_grid.size());
    for (std::size_t i = 0; i < base_rate_grid.size(); ++i) {
        out.min_auc[i].resize(cost_to_benefit_grid.size(), kInfeasibleAuc);
        out.feasible[i].resize(cost_to_benefit_grid.size(), false);
        for (std::size_t j = 0; j < cost_to_benefit_grid.size(); ++j) {
            const RatioSpec rs{benefit_to_roi, cost_to_benefit_grid[j],
                               base_rate_grid[i], num_cases};
            const MinViableResult res =
                find_min_viable_model(case_from_ratios(rs), search);
            if (res.feasible) {
                out.min_auc[i][j] = *res.auc;
                out.feasible[i][j] = true;
            }
        }
    }
    return out;
}

}  // namespace minviable
