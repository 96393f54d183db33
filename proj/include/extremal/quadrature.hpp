// quadrature.hpp — Gauss-Legendre rules and adaptive panel integration.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "errors.hpp"

namespace extremal {

struct GlRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule on (-1,1), Newton iteration on P_n.
/// Rules are cached; the cached references stay valid for the process
/// lifetime.
inline const GlRule& gl_rule(std::size_t n) {
    if (n < 1) throw InvalidParameterError("gl_rule: n must be >= 1");
    static std::map<std::size_t, GlRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GlRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Chebyshev-style initial guess for the i-th root of P_n.
        double x = std::cos(3.14159265358979323846 * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    auto [ins, ok] = cache.emplace(n, std::move(rule));
    (void)ok;
    return ins->second;
}

/// Fixed-order Gauss-Legendre integral of f over [a,b].
template <typename F>
double integrate_gl(F&& f, double a, double b, std::size_t n) {
    const GlRule& rule = gl_rule(n);
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        sum += rule.weights[i] * f(mid + hw * rule.nodes[i]);
    return hw * sum;
}

/// Adaptive bisection with a GL(n) vs two-half-panels error estimate.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol,
                          std::size_t n = 16, int max_depth = 24) {
    struct Rec {
        const std::decay_t<F>& fn;
        std::size_t order;
        double tol;
        double run(double lo, double hi, double whole, int depth) const {
            const double mid = 0.5 * (lo + hi);
            const double left = integrate_gl(fn, lo, mid, order);
            const double right = integrate_gl(fn, mid, hi, order);
            const double err = std::abs(left + right - whole);
            if (err < tol || depth <= 0) return left + right;
            return run(lo, mid, left, depth - 1) + run(mid, hi, right, depth - 1);
        }
    };
    Rec rec{f, n, abs_tol};
    return rec.run(a, b, integrate_gl(f, a, b, n), max_depth);
}

}  // namespace extremal
