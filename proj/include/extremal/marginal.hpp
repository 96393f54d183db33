// marginal.hpp — the symmetric marginal law G of X_11 = R_k U_1.
//
// For a correlation-matrix shape every coordinate of the elliptical vector
// has this law.  G is either analytic (normal, uniform) or built from a
// RadialLaw by mixing the sphere-coordinate CDF over the radial quantiles.
#pragma once

#include <boost/math/distributions/beta.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "normal.hpp"
#include "radial.hpp"
#include "scale_law.hpp"

namespace extremal {

/// Distribution of one coordinate of an elliptical vector, symmetric about 0.
struct MarginalLaw {
    std::function<double(double)> cdf;       // G, with G(0) = 1/2
    std::function<double(double)> quantile;  // (0,1) -> R
    /// Gumbel-MDA scaling function, empty when the family has none declared.
    std::function<double(double)> scaling_w;
    /// Weibull-MDA index of G (NaN when not a Weibull family).
    double weibull_index = std::numeric_limits<double>::quiet_NaN();
    double upper_endpoint = std::numeric_limits<double>::infinity();
    std::string source;

    bool has_w() const { return static_cast<bool>(scaling_w); }
};

/// G = Phi: the marginal of a Gaussian vector (chi_k radial, any k).
/// The default scaling function is the normal hazard rate phi/(1-Phi), a von
/// Mises choice asymptotically equal to x; pass w explicitly for variants.
inline MarginalLaw normal_marginal() {
    MarginalLaw g;
    g.cdf = [](double x) { return norm_cdf(x); };
    g.quantile = [](double p) { return norm_quantile(p); };
    g.scaling_w = [](double x) { return norm_pdf(x) / norm_sf(x); };
    g.source = "normal";
    return g;
}

/// Uniform on (-1,1): G(x) = (x+1)/2.
inline MarginalLaw uniform_marginal() {
    MarginalLaw g;
    g.cdf = [](double x) {
        if (x <= -1.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return 0.5 * (x + 1.0);
    };
    g.quantile = [](double p) { return 2.0 * p - 1.0; };
    g.weibull_index = 1.0;
    g.upper_endpoint = 1.0;
    g.source = "uniform(-1,1)";
    return g;
}

inline MarginalLaw custom_marginal(std::function<double(double)> cdf,
                                   std::function<double(double)> quantile,
                                   std::function<double(double)> w = {},
                                   double upper = std::numeric_limits<double>::infinity(),
                                   double weibull_index = std::numeric_limits<double>::quiet_NaN()) {
    MarginalLaw g;
    g.cdf = std::move(cdf);
    g.quantile = std::move(quantile);
    g.scaling_w = std::move(w);
    g.upper_endpoint = upper;
    g.weibull_index = weibull_index;
    g.source = "custom";
    return g;
}

namespace detail {

/// Mirror a CDF table of |X| into the symmetric law of X.
inline MarginalLaw symmetric_from_abs_table(std::shared_ptr<MonotoneCubic> table,
                                            const std::string& source) {
    MarginalLaw g;
    g.cdf = [table](double x) {
        const double ax = std::abs(x);
        double half;
        if (ax <= table->x_min())
            half = 0.0;
        else if (ax >= table->x_max())
            half = 1.0;
        else
            half = (*table)(ax);
        return x >= 0.0 ? 0.5 + 0.5 * half : 0.5 - 0.5 * half;
    };
    g.quantile = [table](double p) {
        const double half = std::abs(2.0 * p - 1.0);
        const double ax = half <= 0.0 ? 0.0 : table->inverse(half);
        return p >= 0.5 ? ax : -ax;
    };
    g.source = source;
    return g;
}

}  // namespace detail

/// G built from a RadialLaw: G(x) = E[ F_{U1}(x / R) ] with F_{U1} the CDF of
/// the first sphere coordinate, U1^2 ~ Beta(1/2,(k-1)/2).  512-node
/// Gauss-Legendre against the radial quantiles, frozen into a table.
/// chi_k radials short-circuit to the exact normal marginal.
inline MarginalLaw marginal_from_radial(const RadialLaw& radial, std::size_t k) {
    if (k < 1) throw InvalidDimensionError("marginal_from_radial: k must be >= 1");
    if (radial.is_chi && radial.chi_dof == static_cast<double>(k)) {
        MarginalLaw g = normal_marginal();
        g.source = "radial:" + radial.name;
        return g;
    }
    if (k == 1) {
        // X = R * (fair sign): |X| ~ R directly.
        auto cdf = radial.cdf;
        auto quantile = radial.quantile;
        MarginalLaw g;
        g.cdf = [cdf](double x) {
            return x >= 0.0 ? 0.5 + 0.5 * cdf(x) : 0.5 - 0.5 * cdf(-x);
        };
        g.quantile = [quantile](double p) {
            const double half = std::abs(2.0 * p - 1.0);
            const double ax = half <= 0.0 ? 0.0 : quantile(half);
            return p >= 0.5 ? ax : -ax;
        };
        g.upper_endpoint = radial.upper_endpoint;
        if (radial.mda_class == MdaClass::Weibull) g.weibull_index = radial.weibull_alpha;
        g.source = "radial:" + radial.name;
        return g;
    }

    const double a = 0.5;
    const double b = 0.5 * static_cast<double>(k - 1);
    auto beta = std::make_shared<boost::math::beta_distribution<double>>(a, b);
    std::vector<double> nodes, weights;
    detail::unit_gl(512, nodes, weights);
    std::vector<double> r(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) r[i] = radial.quantile(nodes[i]);

    // CDF of |X| = R |U1|: P{|X| <= x} = E[ I_{(x/R)^2}(1/2,(k-1)/2) ].
    auto abs_cdf = [beta, r, weights](double x) {
        if (x <= 0.0) return 0.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double t = (x >= r[i]) ? 1.0 : (x * x) / (r[i] * r[i]);
            sum += weights[i] * boost::math::cdf(*beta, t);
        }
        return std::min(1.0, sum);
    };
    const double hi_hint = std::isfinite(radial.upper_endpoint)
                               ? radial.upper_endpoint
                               : radial.quantile(0.999999);
    MarginalLaw g = detail::symmetric_from_abs_table(
        detail::tabulate_cdf(abs_cdf, hi_hint, radial.upper_endpoint),
        "radial:" + radial.name);
    g.upper_endpoint = radial.upper_endpoint;
    // Hashorva-Pakes index transfer at a finite endpoint: G inherits
    // Weibull-MDA with index alpha + (k-1)/2.
    if (radial.mda_class == MdaClass::Weibull)
        g.weibull_index = radial.weibull_alpha + 0.5 * static_cast<double>(k - 1);
    return g;
}

/// Marginal of the spherical model X = S * N(0,1): G(x) = E[Phi(x/S)].
inline MarginalLaw scaled_normal_marginal(const ScaleLaw& scale) {
    if (scale.is_constant_one()) return normal_marginal();
    std::vector<double> nodes, weights;
    detail::unit_gl(512, nodes, weights);
    std::vector<double> s(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) s[i] = scale.quantile(nodes[i]);

    auto abs_cdf = [s, weights](double x) {
        if (x <= 0.0) return 0.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i)
            sum += weights[i] * (2.0 * norm_cdf(x / s[i]) - 1.0);
        return std::min(1.0, sum);
    };
    const double s_hi = std::isfinite(scale.upper_endpoint) ? scale.upper_endpoint
                                                            : scale.quantile(0.999999);
    MarginalLaw g = detail::symmetric_from_abs_table(
        detail::tabulate_cdf(abs_cdf, 8.0 * std::max(1.0, s_hi)),
        "scaled_normal:" + scale.name);
    return g;
}

}  // namespace extremal
