// norming.hpp — norming-constant solvers for the three extreme regimes and
// the closed-form spherical Model A/B asymptotics.
//
// Minima:        P{0 < X11 <= 1/a_n} = 1/n,            c_n = 2 a_n^2.
// Gumbel maxima: b_n = G^{-1}(1-1/n), a_n = 1/w(b_n),  c_n = 2 b_n/a_n.
// Weibull maxima (endpoint 1): a_n = 1 - G^{-1}(1-1/n), c_n = 2/a_n.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "marginal.hpp"
#include "radial.hpp"
#include "rootfind.hpp"

namespace extremal {

struct NormingPair {
    double a_n = 0.0;
    double b_n = 0.0;  // location (0 for minima, 1 for Weibull maxima)
    std::size_t n = 0;
    double c_n = 0.0;  // schedule constant for the matching regime
};

namespace detail {

/// Root of cdf(x) = target to relative tolerance 1e-10, bracketed around the
/// law's own quantile guess.
inline double invert_cdf(const std::function<double(double)>& cdf,
                         const std::function<double(double)>& quantile, double target,
                         double lo_domain, double hi_domain) {
    // Clamp the guess probability: target may sit at 1 (reachable only for
    // laws with a finite endpoint; bracket expansion settles it either way).
    const double guess = quantile(std::min(std::max(target, 1e-12), 1.0 - 1e-12));
    double lo = std::max(lo_domain, guess - std::max(1e-8, 1e-8 * std::abs(guess)));
    double hi = std::min(hi_domain, guess + std::max(1e-8, 1e-8 * std::abs(guess)));
    return invert_increasing(cdf, target, lo, hi, 1e-10, lo_domain, hi_domain);
}

}  // namespace detail

/// Minima norming: a_n = 1/q with G(q) - 1/2 = 1/n.
inline NormingPair min_norming(const MarginalLaw& g, std::size_t n) {
    if (n < 2) throw InvalidParameterError("min_norming: n must be >= 2");
    const double target = 0.5 + 1.0 / static_cast<double>(n);
    // G(q) = 1 (the n = 2 boundary) is solvable only at a finite endpoint.
    if (target >= 1.0 && !std::isfinite(g.upper_endpoint))
        throw NoSolutionError("min_norming: G(q) = 1/2 + 1/n is unreachable");
    const double q = detail::invert_cdf(g.cdf, g.quantile, target, 0.0,
                                        g.upper_endpoint);
    if (!(q > 0.0))
        throw NoSolutionError("min_norming: G has an atom at 0");
    // Reject flat stretches (atom or gap) around the solution.
    if (!(g.cdf(0.5 * q) < target - 1e-14))
        throw NoSolutionError("min_norming: G is flat near 0");
    const double a = 1.0 / q;
    return {a, 0.0, n, 2.0 * a * a};
}

/// Gumbel-MDA norming; w defaults to the family's declared scaling function.
inline NormingPair gumbel_norming(const MarginalLaw& g, std::size_t n,
                                  const std::function<double(double)>& w_override = {}) {
    if (n < 2) throw InvalidParameterError("gumbel_norming: n must be >= 2");
    const std::function<double(double)>& w = w_override ? w_override : g.scaling_w;
    if (!w)
        throw UnsupportedLawError(
            "gumbel_norming: no scaling function declared for this family");
    const double target = 1.0 - 1.0 / static_cast<double>(n);
    const double b = detail::invert_cdf(g.cdf, g.quantile, target,
                                        -kInf, g.upper_endpoint);
    const double wb = w(b);
    if (!(wb > 0.0)) throw UnsupportedLawError("gumbel_norming: w(b_n) must be > 0");
    const double a = 1.0 / wb;
    return {a, b, n, 2.0 * b / a};
}

namespace detail {

inline NormingPair weibull_norming_impl(const std::function<double(double)>& cdf,
                                        const std::function<double(double)>& quantile,
                                        double upper_endpoint, std::size_t n) {
    if (n < 2) throw InvalidParameterError("weibull_norming: n must be >= 2");
    if (!(std::abs(upper_endpoint - 1.0) <= 1e-9))
        throw UnsupportedLawError("weibull_norming: upper endpoint must equal 1");
    const double target = 1.0 - 1.0 / static_cast<double>(n);
    const double q = invert_cdf(cdf, quantile, target, -kInf, 1.0);
    const double a = 1.0 - q;
    if (!(a > 0.0))
        throw NoSolutionError("weibull_norming: flat upper tail");
    return {a, 1.0, n, 2.0 / a};
}

}  // namespace detail

inline NormingPair weibull_norming(const MarginalLaw& g, std::size_t n) {
    return detail::weibull_norming_impl(g.cdf, g.quantile, g.upper_endpoint, n);
}

inline NormingPair weibull_norming(const RadialLaw& h, std::size_t n) {
    return detail::weibull_norming_impl(h.cdf, h.quantile, h.upper_endpoint, n);
}

/// Closed-form constants of the spherical Model A:
///   A = (p1 L1)^{1/(2+p1)},  B = L1 A^{-p1} + A^2/2,
///   b_n = (ln n / B)^{(2+p1)/(2 p1)},
///   w(x) = B (2 p1/(2+p1)) x^{(p1-2)/(2+p1)},  a_n = 1/w(b_n),
/// with b_n/a_n = (2 p1/(2+p1)) ln n exactly for this b_n.
struct ModelAConstants {
    double a_big = 0.0;  // A
    double b_big = 0.0;  // B
    double b_n = 0.0;
    double a_n = 0.0;
    double ratio = 0.0;  // b_n / a_n
    std::function<double(double)> w;
};

inline ModelAConstants model_a_constants(double c1, double alpha1, double l1, double p1,
                                         double n) {
    (void)alpha1;  // enters the tail constant, not the norming constants
    if (!(c1 > 0.0) || !(l1 > 0.0) || !(p1 > 0.0))
        throw InvalidParameterError("model_a_constants: C1, L1, p1 must be > 0");
    if (!(n > 1.0)) throw InvalidParameterError("model_a_constants: n must be > 1");
    ModelAConstants out;
    out.a_big = std::pow(p1 * l1, 1.0 / (2.0 + p1));
    out.b_big = l1 * std::pow(out.a_big, -p1) + 0.5 * out.a_big * out.a_big;
    const double b_cap = out.b_big;
    const double factor = 2.0 * p1 / (2.0 + p1);
    out.w = [b_cap, factor, p1](double x) {
        return b_cap * factor * std::pow(x, (p1 - 2.0) / (2.0 + p1));
    };
    out.b_n = std::pow(std::log(n) / out.b_big, (2.0 + p1) / (2.0 * p1));
    out.a_n = 1.0 / out.w(out.b_n);
    out.ratio = out.b_n / out.a_n;
    return out;
}

/// First-order Model B constants: b_n = sqrt(2 ln n), a_n = 1/b_n (so
/// a_n b_n = 1 identically).  Theorem-level statements fix these only up to
/// (1+o(1)); use gumbel_norming with the composite G for the exact variant.
inline NormingPair model_b_constants(std::size_t n) {
    if (n < 2) throw InvalidParameterError("model_b_constants: n must be >= 2");
    const double b = std::sqrt(2.0 * std::log(static_cast<double>(n)));
    const double a = 1.0 / b;
    return {a, b, n, 2.0 * b / a};
}

/// Exact Model B norming from the composite marginal G = E[Phi(x/S)], with
/// the Gaussian scaling function w(x) = x.
inline NormingPair model_b_norming_exact(const MarginalLaw& g, std::size_t n) {
    return gumbel_norming(g, n, [](double x) { return x; });
}

/// Davis-Resnick tail diagnostic: r(x) = (x w(x))^mu (1-G(tau x))/(1-G(x))
/// on an increasing grid; for a Gumbel-MDA family the values run to zero.
inline std::vector<double> davis_resnick_check(const MarginalLaw& g, double mu,
                                               double tau,
                                               std::span<const double> x_grid) {
    if (!(tau > 1.0))
        throw InvalidParameterError("davis_resnick_check: tau must be > 1");
    if (!g.has_w())
        throw UnsupportedLawError("davis_resnick_check: family has no scaling function");
    std::vector<double> out;
    out.reserve(x_grid.size());
    double prev = -kInf;
    for (double x : x_grid) {
        if (!(x > prev))
            throw InvalidParameterError("davis_resnick_check: grid must be increasing");
        prev = x;
        const double den = 1.0 - g.cdf(x);
        if (!(den > 0.0))
            throw DomainError("davis_resnick_check: x beyond the upper endpoint");
        const double num = 1.0 - g.cdf(tau * x);
        out.push_back(std::pow(x * g.scaling_w(x), mu) * num / den);
    }
    return out;
}

}  // namespace extremal
