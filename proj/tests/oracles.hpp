// oracles.hpp — test-only reference implementations, independent of the
// library code paths they are used to check.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
inline double normal_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }
inline double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * 3.14159265358979323846);
}

/// Plain bisection solve of f(x) = 0 on [lo, hi]; used to freeze expected
/// quantile/norming values without touching the library's solvers.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 200) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    if ((flo > 0) == (f(hi) > 0)) throw std::runtime_error("oracle::bisect: bad bracket");
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double normal_quantile(double p) {
    return bisect([p](double x) { return normal_cdf(x) - p; }, -40.0, 40.0);
}

/// Composite-trapezoid integration, plain and slow.
inline double trapezoid(const std::function<double(double)>& f, double a, double b,
                        std::size_t n = 20000) {
    double sum = 0.5 * (f(a) + f(b));
    const double h = (b - a) / static_cast<double>(n);
    for (std::size_t i = 1; i < n; ++i) sum += f(a + h * static_cast<double>(i));
    return sum * h;
}

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double variance(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

}  // namespace oracle
