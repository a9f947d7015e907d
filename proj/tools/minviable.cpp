// Command-line front end: single-case estimates, dimension sweeps, and the
// base-rate x cost/benefit AUC surface, with JSON/CSV output and an optional
// SVG chart for sweeps.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "minviable/minviable.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;

struct EstimateOptions {
    double cases = 0, base_rate = 0, tp_benefit = 0, fp_cost = 0, min_roi = 0;
    std::string case_file;
    std::size_t thresholds = 1001;
    double beta_max = 100.0;
    std::size_t beta_steps = 60;
    double alpha_tol = 1e-4;
    std::string format = "json";
};

struct SweepOptions {
    std::string dimension;
    double from = 0, to = 0;
    std::size_t points = 25;
    std::size_t samples = 200;
    std::uint64_t seed = 0;
    double cases = 1e6;
    std::string out_path;
    std::string svg_path;
};

struct SurfaceOptions {
    double benefit_roi_ratio = 1e-4;
    double base_rate_from = 5e-3, base_rate_to = 3e-2;
    std::size_t base_rate_points = 20;
    double cb_from = 1e-2, cb_to = 1.0;
    std::size_t cb_points = 20;
    double cases = 1e6;
    std::string out_path;
};

minviable::SearchConfig make_search(double beta_max, std::size_t beta_steps,
                                    std::size_t thresholds, double alpha_tol) {
    if (!(beta_max >= 0.5))
        throw std::invalid_argument("--beta-max must be >= 0.5");
    if (beta_steps == 0)
        throw std::invalid_argument("--beta-steps must be positive");
    minviable::SearchConfig cfg;
    cfg.beta_grid = minviable::log_spaced(0.5, beta_max, beta_steps);
    cfg.thresholds = thresholds;
    cfg.alpha_tol = alpha_tol;
    return cfg;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    return out;
}

int run_estimate(const EstimateOptions& opt, bool inline_flags_complete) {
    minviable::BusinessCase bc{};
    if (!opt.case_file.empty()) {
        bc = minviable::load_case_file(opt.case_file);
    } else if (inline_flags_complete) {
        bc = minviable::validate(minviable::BusinessCase{
            opt.cases, opt.base_rate, opt.tp_benefit, opt.fp_cost,
            opt.min_roi});
    } else {
        throw std::invalid_argument(
            "estimate needs either --case-file or all of --cases, "
            "--base-rate, --tp-benefit, --fp-cost, --min-roi");
    }

    const minviable::SearchConfig cfg =
        make_search(opt.beta_max, opt.beta_steps, opt.thresholds,
                    opt.alpha_tol);
    const minviable::EstimateRecord rec{bc, cfg,
                                        minviable::find_min_viable_model(bc, cfg)};
    if (opt.format == "json")
        std::cout << minviable::to_json(rec).dump(2) << '\n';
    else
        minviable::write_estimate_csv(std::cout, rec);
    return kExitOk;
}

int run_sweep(const SweepOptions& opt) {
    static const std::map<std::string, minviable::SweepDimension> kDims{
        {"benefit-to-roi", minviable::SweepDimension::benefit_to_roi},
        {"cost-to-benefit", minviable::SweepDimension::cost_to_benefit},
        {"base-rate", minviable::SweepDimension::base_rate}};
    const auto dim = kDims.find(opt.dimension);
    if (dim == kDims.end())
        throw std::invalid_argument("--dimension must be benefit-to-roi, "
                                    "cost-to-benefit or base-rate");

    minviable::SweepSpec spec;
    spec.dimension = dim->second;
    spec.grid = minviable::log_spaced(opt.from, opt.to, opt.points);
    spec.background_samples = opt.samples;
    spec.num_cases = opt.cases;
    spec.seed = opt.seed;
    const std::vector<minviable::SweepRow> rows = minviable::sweep(spec);

    auto out = open_output(opt.out_path);
    minviable::write_sweep_csv(out, rows);
    if (!out) throw std::invalid_argument("failed writing " + opt.out_path);
    if (!opt.svg_path.empty()) {
        auto svg = open_output(opt.svg_path);
        minviable::write_sweep_svg(svg, rows, opt.dimension);
        if (!svg) throw std::invalid_argument("failed writing " + opt.svg_path);
    }
    std::cout << "wrote " << rows.size() << " rows to " << opt.out_path
              << '\n';
    return kExitOk;
}

int run_surface(const SurfaceOptions& opt) {
    const auto base_rates = minviable::log_spaced(
        opt.base_rate_from, opt.base_rate_to, opt.base_rate_points);
    const auto cost_benefit =
        minviable::log_spaced(opt.cb_from, opt.cb_to, opt.cb_points);
    const minviable::SurfaceResult surf = minviable::surface(
        opt.benefit_roi_ratio, base_rates, cost_benefit, opt.cases);

    auto out = open_output(opt.out_path);
    minviable::write_surface_csv(out, surf);
    if (!out) throw std::invalid_argument("failed writing " + opt.out_path);
    std::cout << "wrote " << base_rates.size() * cost_benefit.size()
              << " rows to " << opt.out_path << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Estimates the minimum classifier performance a business case "
        "requires to meet its ROI target."};
    app.require_subcommand(1);

    EstimateOptions est;
    CLI::App* estimate = app.add_subcommand(
        "estimate", "Minimum viable model for a single business case");
    auto* f_cases = estimate->add_option("--cases", est.cases,
                                         "Events per analysis period");
    auto* f_rate = estimate->add_option("--base-rate", est.base_rate,
                                        "Positive-event prevalence in (0,1)");
    auto* f_benefit = estimate->add_option("--tp-benefit", est.tp_benefit,
                                           "Benefit per true positive");
    auto* f_cost = estimate->add_option("--fp-cost", est.fp_cost,
                                        "Cost per false positive");
    auto* f_roi = estimate->add_option("--min-roi", est.min_roi,
                                       "Required return per period");
    auto* f_file = estimate->add_option(
        "--case-file", est.case_file,
        "JSON case file (overrides the inline case flags)");
    for (auto* f : {f_cases, f_rate, f_benefit, f_cost, f_roi})
        f_file->excludes(f);
    estimate->add_option("--thresholds", est.thresholds,
                         "Threshold samples per curve");
    estimate->add_option("--beta-max", est.beta_max, "Upper end of the beta grid");
    estimate->add_option("--beta-steps", est.beta_steps, "Beta grid size");
    estimate->add_option("--alpha-tol", est.alpha_tol,
                         "Bisection tolerance on alpha");
    estimate->add_option("--format", est.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    SweepOptions swp;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Difficulty trend along one problem-space dimension");
    sweep
        ->add_option("--dimension", swp.dimension,
                     "benefit-to-roi | cost-to-benefit | base-rate")
        ->required();
    auto* f_from = sweep->add_option("--from", swp.from, "Sweep range start");
    auto* f_to = sweep->add_option("--to", swp.to, "Sweep range end");
    sweep->add_option("--points", swp.points, "Grid points (log-spaced)");
    sweep->add_option("--samples", swp.samples,
                      "Background samples per grid point");
    sweep->add_option("--seed", swp.seed, "Background sampling seed");
    sweep->add_option("--cases", swp.cases, "Events per analysis period");
    sweep->add_option("--out", swp.out_path, "Output CSV path")->required();
    sweep->add_option("--svg", swp.svg_path, "Optional SVG chart path");

    SurfaceOptions srf;
    CLI::App* surface = app.add_subcommand(
        "surface", "AUC surface over base rate and cost/benefit");
    surface->add_option("--benefit-roi-ratio", srf.benefit_roi_ratio,
                        "Fixed benefit-to-ROI ratio");
    surface->add_option("--base-rate-from", srf.base_rate_from,
                        "Base-rate grid start");
    surface->add_option("--base-rate-to", srf.base_rate_to,
                        "Base-rate grid end");
    surface->add_option("--base-rate-points", srf.base_rate_points,
                        "Base-rate grid size");
    surface->add_option("--cb-from", srf.cb_from, "Cost/benefit grid start");
    surface->add_option("--cb-to", srf.cb_to, "Cost/benefit grid end");
    surface->add_option("--cb-points", srf.cb_points, "Cost/benefit grid size");
    surface->add_option("--cases", srf.cases, "Events per analysis period");
    surface->add_option("--out", srf.out_path, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "minviable: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (estimate->parsed()) {
            const bool inline_complete =
                f_cases->count() && f_rate->count() && f_benefit->count() &&
                f_cost->count() && f_roi->count();
            return run_estimate(est, inline_complete);
        }
        if (sweep->parsed()) {
            // Per-dimension default ranges when --from/--to are omitted.
            if (!f_from->count() || !f_to->count()) {
                const minviable::BackgroundRanges ranges;
                minviable::RatioInterval iv = ranges.base_rate;
                if (swp.dimension == "benefit-to-roi")
                    iv = ranges.benefit_to_roi;
                else if (swp.dimension == "cost-to-benefit")
                    iv = ranges.cost_to_benefit;
                if (!f_from->count()) swp.from = iv.lo;
                if (!f_to->count()) swp.to = iv.hi;
            }
            return run_sweep(swp);
        }
        return run_surface(srf);
    } catch (const std::exception& e) {
        std::cerr << "minviable: " << e.what() << '\n';
        return kExitInputError;
    }
}
