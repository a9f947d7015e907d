#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace minviable {

/// n logarithmically spaced values from lo to hi inclusive. Endpoints are
/// assigned exactly so grids built from user-facing bounds hit them.
inline std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > 0.0))
        throw std::invalid_argument("log_spaced bounds must be positive");
    if (n == 0) throw std::invalid_argument("log_spaced needs at least one point");
    if (n == 1) return {lo};
    std::vector<double> out(n);
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        out[i] = std::exp(log_lo + t * (log_hi - log_lo));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

/// Quantile by linear interpolation on an already sorted sample.
inline double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty())
        throw std::invalid_argument("quantile of an empty sample");
    if (sorted.size() == 1) return sorted.front();
    const double h = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace minviable
