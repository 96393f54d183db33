// stats.hpp — empirical CDFs, Kolmogorov-Smirnov distances, DKW radii.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "errors.hpp"

namespace extremal {

/// Right-continuous empirical CDF of `samples` evaluated on `grid`.
inline std::vector<double> ecdf(std::span<const double> samples,
                                std::span<const double> grid) {
    if (samples.empty()) throw InvalidParameterError("ecdf: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out(grid.size());
    const double n = static_cast<double>(sorted.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), grid[j]);
        out[j] = static_cast<double>(it - sorted.begin()) / n;
    }
    return out;
}

/// One-sample KS statistic: sup over the sample's jump points of
/// |ECDF - cdf|, taking both sides of each jump.
inline double ks_distance(std::span<const double> samples,
                          const std::function<double(double)>& cdf) {
    if (samples.empty()) throw InvalidParameterError("ks_distance: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        sup = std::max(sup, std::abs(f - static_cast<double>(i) / n));
        sup = std::max(sup, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return sup;
}

/// Two-sample KS statistic.
inline double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw InvalidParameterError("ks_two_sample: empty sample");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double sup = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= x) ++i;
        while (j < sb.size() && sb[j] <= x) ++j;
        sup = std::max(sup, std::abs(static_cast<double>(i) / na -
                                     static_cast<double>(j) / nb));
    }
    return sup;
}

/// DKW uniform confidence radius: sqrt(ln(2/delta) / (2 n)).
inline double dkw_radius(std::size_t n, double delta = 0.01) {
    if (n == 0) throw InvalidParameterError("dkw_radius: n must be >= 1");
    return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(n)));
}

/// Asymptotic two-sample KS critical value at level alpha:
/// c(alpha) * sqrt((n+m)/(n m)), c(alpha) = sqrt(-ln(alpha/2)/2).
inline double ks_two_sample_critical(std::size_t n, std::size_t m, double alpha) {
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    const double nn = static_cast<double>(n), mm = static_cast<double>(m);
    return c * std::sqrt((nn + mm) / (nn * mm));
}

/// Asymptotic one-sample KS critical value at level alpha.
inline double ks_critical(std::size_t n, double alpha) {
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    return c / std::sqrt(static_cast<double>(n));
}

}  // namespace extremal
