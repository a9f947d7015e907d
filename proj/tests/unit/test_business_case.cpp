#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minviable/analytic_bounds.hpp"
#include "minviable/business_case.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;
using namespace minviable;

namespace {

// Reference payoff straight from the four matrix cells; the oracle for the
// reduction identity.
double full_matrix_payoff(const CostMatrix& m, double num_cases,
                          double base_rate, double tp, double fp) {
    const double fn = num_cases * base_rate - tp;
    const double tn = num_cases * (1.0 - base_rate) - fp;
    return tp * m.tp_value + fp * m.fp_value + fn * m.fn_value +
           tn * m.tn_value;
}

}  // namespace

TEST_CASE("validate accepts a well-formed case") {
    const BusinessCase c{1e6, 0.01, 200.0, 10.0, 1e5};
    const BusinessCase v = validate(c);
    REQUIRE(v.num_cases == c.num_cases);
    REQUIRE(v.base_rate == c.base_rate);
    REQUIRE(v.tp_benefit == c.tp_benefit);
    REQUIRE(v.fp_cost == c.fp_cost);
    REQUIRE(v.min_roi == c.min_roi);
    REQUIRE(positive_cases(v) > 0.0);
    REQUIRE(negative_cases(v) > 0.0);
}

TEST_CASE("validate names the offending field") {
    REQUIRE_THROWS_WITH(validate({1e6, 0.0, 200.0, 10.0, 1e5}),
                        ContainsSubstring("base_rate must lie in (0,1)"));
    REQUIRE_THROWS_WITH(validate({1e6, 1.0, 200.0, 10.0, 1e5}),
                        ContainsSubstring("base_rate"));
    REQUIRE_THROWS_WITH(validate({1e6, 0.01, -5.0, 10.0, 1e5}),
                        ContainsSubstring("tp_benefit must be positive"));
    REQUIRE_THROWS_WITH(validate({0.0, 0.01, 200.0, 10.0, 1e5}),
                        ContainsSubstring("num_cases"));
    REQUIRE_THROWS_WITH(validate({1e6, 0.01, 200.0, 0.0, 1e5}),
                        ContainsSubstring("fp_cost"));
    REQUIRE_THROWS_WITH(validate({1e6, 0.01, 200.0, 10.0, -1.0}),
                        ContainsSubstring("min_roi"));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(validate({nan, 0.01, 200.0, 10.0, 1e5}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(validate({1e6, 0.01, inf, 10.0, 1e5}),
                      std::invalid_argument);
}

TEST_CASE("min_roi of zero is allowed (break-even analysis)") {
    REQUIRE_NOTHROW(validate({1e6, 0.5, 1.0, 1.0, 0.0}));
}

TEST_CASE("reduce_cost_matrix on a zero negative row is the identity") {
    // Only the action row carries value; the status quo already absorbs the
    // false negatives.
    const BusinessCase c =
        reduce_cost_matrix({200.0, -10.0, 0.0, 0.0}, 1e6, 0.01, 1e5);
    REQUIRE(c.tp_benefit == 200.0);
    REQUIRE(c.fp_cost == 10.0);
    REQUIRE(c.min_roi == 1e5);
    REQUIRE(cost_matrix_baseline({200.0, -10.0, 0.0, 0.0}, 1e6, 0.01) == 0.0);
}

TEST_CASE("reduce_cost_matrix rejects non-reducible matrices") {
    REQUIRE_THROWS_WITH(reduce_cost_matrix({1.0, 1.0, 0.0, 0.0}, 100, 0.5, 0.0),
                        ContainsSubstring("effective cost non-positive"));
    REQUIRE_THROWS_WITH(reduce_cost_matrix({1.0, 0.0, 2.0, 1.0}, 100, 0.5, 0.0),
                        ContainsSubstring("effective benefit non-positive"));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    REQUIRE_THROWS_AS(reduce_cost_matrix({nan, 0.0, 0.0, 1.0}, 100, 0.5, 0.0),
                      std::invalid_argument);
}

TEST_CASE("reduce_cost_matrix shifts the ROI target by the baseline") {
    // Baseline = 50 * 100 = 5000 eats the whole target.
    const BusinessCase c =
        reduce_cost_matrix({300.0, -10.0, 100.0, 0.0}, 100, 0.5, 5000.0);
    REQUIRE(c.tp_benefit == 200.0);
    REQUIRE(c.fp_cost == 10.0);
    REQUIRE(c.min_roi == 0.0);

    // A baseline above the target clamps at zero instead of going negative.
    const BusinessCase clamped =
        reduce_cost_matrix({300.0, -10.0, 100.0, 0.0}, 100, 0.5, 2000.0);
    REQUIRE(clamped.min_roi == 0.0);
}

TEST_CASE("reduced payoff plus baseline equals the cell-wise payoff") {
    const CostMatrix m{300.0, -10.0, 100.0, 0.0};
    const double N = 100, r = 0.5;
    const BusinessCase c = reduce_cost_matrix(m, N, r, 5000.0);
    const double baseline = cost_matrix_baseline(m, N, r);
    for (int tp = 0; tp <= 50; ++tp) {
        for (int fp = 0; fp <= 50; ++fp) {
            const double via_reduced =
                payoff(c, {double(tp), double(fp)}) + baseline;
            const double via_cells = full_matrix_payoff(m, N, r, tp, fp);
            REQUIRE_THAT(via_reduced,
                         WithinRel(via_cells, 1e-12) ||
                             Catch::Matchers::WithinAbs(via_cells, 1e-9));
        }
    }
}

TEST_CASE("reduction identity holds for randomized matrices") {
    std::mt19937 gen(20260811);
    std::uniform_real_distribution<double> cell(-50.0, 50.0);
    std::uniform_real_distribution<double> rate(0.1, 0.9);
    std::uniform_int_distribution<int> volume(10, 200);
    int tested = 0;
    while (tested < 25) {
        CostMatrix m{cell(gen), cell(gen), cell(gen), cell(gen)};
        if (m.tp_value - m.fn_value <= 0.0 || m.tn_value - m.fp_value <= 0.0)
            continue;
        const double N = volume(gen);
        const double r = rate(gen);
        const BusinessCase c = reduce_cost_matrix(m, N, r, 100.0);
        const double baseline = cost_matrix_baseline(m, N, r);
        const int tp_max = static_cast<int>(N * r);
        const int fp_max = static_cast<int>(N * (1.0 - r));
        for (int tp = 0; tp <= tp_max; tp += 3) {
            for (int fp = 0; fp <= fp_max; fp += 3) {
                const double lhs =
                    c.tp_benefit * tp - c.fp_cost * fp + baseline;
                const double rhs = full_matrix_payoff(m, N, r, tp, fp);
                REQUIRE_THAT(lhs, WithinRel(rhs, 1e-12) ||
                                      Catch::Matchers::WithinAbs(rhs, 1e-9));
            }
        }
        ++tested;
    }
}

TEST_CASE("case_from_ratios normalizes the ROI target to one") {
    const BusinessCase c = case_from_ratios({1e-4, 0.5, 0.01, 1e6});
    REQUIRE(c.num_cases == 1e6);
    REQUIRE(c.base_rate == 0.01);
    REQUIRE(c.tp_benefit == 1e-4);
    REQUIRE(c.fp_cost == 5e-5);
    REQUIRE(c.min_roi == 1.0);
}

TEST_CASE("case_from_ratios identity ratios") {
    const BusinessCase c = case_from_ratios({1.0, 1.0, 0.5, 100.0});
    REQUIRE(c.num_cases == 100.0);
    REQUIRE(c.base_rate == 0.5);
    REQUIRE(c.tp_benefit == 1.0);
    REQUIRE(c.fp_cost == 1.0);
    REQUIRE(c.min_roi == 1.0);
}

TEST_CASE("case_from_ratios rejects out-of-range ratios") {
    REQUIRE_THROWS_AS(case_from_ratios({0.0, 0.5, 0.01, 1e6}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(case_from_ratios({1.5, 0.5, 0.01, 1e6}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(case_from_ratios({0.5, 0.0, 0.01, 1e6}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(case_from_ratios({0.5, 0.5, 1.0, 1e6}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(case_from_ratios({0.5, 0.5, 0.01, 0.0}),
                      std::invalid_argument);
}
