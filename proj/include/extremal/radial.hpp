// radial.hpp — positive radial laws: built-in families, the dimension-drop
// composition R_m^2 = R_k^2 * Beta(m/2,(k-m)/2), and the size-biased
// transform KH with dKH(r) proportional to r^{-1} dH(r).
#pragma once

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "distributions.hpp"
#include "errors.hpp"
#include "interp.hpp"
#include "quadrature.hpp"
#include "rng.hpp"
#include "rootfind.hpp"

namespace extremal {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class MdaClass { None, Gumbel, Weibull };

/// A positive random radius R given by CDF/quantile/sampler handles plus the
/// tail metadata the norming and limit modules consume.
struct RadialLaw {
    std::function<double(double)> cdf;       // R+ -> [0,1], cdf(0) = 0
    std::function<double(double)> quantile;  // (0,1) -> R+
    std::function<double(RngStream&)> sampler;

    /// Regular-variation index of the CDF at 0 (may be +inf); NaN = unknown.
    double rv_index_at_zero = std::numeric_limits<double>::quiet_NaN();
    MdaClass mda_class = MdaClass::None;
    /// Scaling function for Gumbel-MDA families (empty otherwise).
    std::function<double(double)> scaling_w;
    /// Weibull-MDA index alpha (NaN unless mda_class == Weibull).
    double weibull_alpha = std::numeric_limits<double>::quiet_NaN();
    double upper_endpoint = kInf;
    double mean_inverse = kInf;  // E{1/R}
    std::string name;

    /// Marker for R^2 ~ chi^2_dof; enables the exact Gaussian sampling path.
    bool is_chi = false;
    double chi_dof = 0.0;

    double sample(RngStream& rng) const { return sampler(rng); }
};

namespace detail {

/// GL rule mapped onto (0,1).
inline void unit_gl(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
    const GlRule& rule = gl_rule(n);
    nodes.resize(n);
    weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
        weights[i] = 0.5 * rule.weights[i];
    }
}

/// Freeze a slow monotone CDF into a 4096-knot lookup table spanning
/// probability (1e-12, 1-1e-12), z-knots log-spaced near 0.  For laws with a
/// finite upper endpoint the top half of the knots is log-spaced in the gap
/// to the endpoint, so steep upper tails keep full quantile resolution.
/// Quantiles come from the forward table's inverse, so the
/// cdf(quantile(p)) residual is at bisection accuracy.
inline std::shared_ptr<MonotoneCubic> tabulate_cdf(
    const std::function<double(double)>& slow_cdf, double hi_hint,
    double upper_endpoint = kInf, std::size_t node_count = 4096) {
    constexpr double kEdge = 1e-12;
    // Bracket the working range [z_lo, z_hi].
    double z_hi = hi_hint > 0.0 ? hi_hint : 1.0;
    if (std::isfinite(upper_endpoint)) z_hi = std::min(z_hi, upper_endpoint);
    int guard = 0;
    while (slow_cdf(z_hi) < 1.0 - kEdge) {
        if (std::isfinite(upper_endpoint)) break;  // handled by the gap grid
        z_hi *= 2.0;
        if (++guard > 400) throw NoSolutionError("tabulate_cdf: no upper range");
    }
    double z_lo = std::isfinite(upper_endpoint) ? 0.5 * upper_endpoint : z_hi;
    guard = 0;
    while (slow_cdf(z_lo) > kEdge) {
        z_lo *= 0.5;
        if (++guard > 2000) break;  // cdf jumps at 0; keep the last bracket
    }

    std::vector<double> z;
    z.reserve(node_count);
    if (!std::isfinite(upper_endpoint)) {
        const double lr = std::log(z_lo), hr = std::log(z_hi);
        for (std::size_t i = 0; i < node_count; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(node_count - 1);
            z.push_back(std::exp(lr + (hr - lr) * t));
        }
    } else {
        // Lower half: log-spaced in z on [z_lo, w/2]; upper half: log-spaced
        // in the gap w - z down to where the upper tail mass is < 1e-12.
        const double mid = 0.5 * upper_endpoint;
        double gap_lo = mid;
        guard = 0;
        while (slow_cdf(upper_endpoint - gap_lo) < 1.0 - kEdge && gap_lo > 1e-300) {
            gap_lo *= 0.5;
            if (++guard > 2000) break;
        }
        const std::size_t half = node_count / 2;
        const double lr = std::log(z_lo), hr = std::log(std::max(mid, z_lo * 2.0));
        for (std::size_t i = 0; i < half; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(half - 1);
            z.push_back(std::exp(lr + (hr - lr) * t));
        }
        const double gl = std::log(gap_lo), gh = std::log(mid);
        for (std::size_t i = 0; i < half; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(half - 1);
            z.push_back(upper_endpoint - std::exp(gh + (gl - gh) * t));
        }
    }

    std::vector<double> zz, pp;
    zz.reserve(z.size());
    pp.reserve(z.size());
    for (double zi : z) {
        const double pi = slow_cdf(zi);
        if (!zz.empty() && !(zi > zz.back() && pi >= pp.back())) continue;
        zz.push_back(zi);
        pp.push_back(pi);
    }
    return std::make_shared<MonotoneCubic>(std::move(zz), std::move(pp));
}

inline void attach_table(RadialLaw& law, std::shared_ptr<MonotoneCubic> table) {
    law.cdf = [table](double x) {
        if (x <= table->x_min()) return 0.0;
        if (x >= table->x_max()) return 1.0;
        return (*table)(x);
    };
    law.quantile = [table](double prob) { return table->inverse(prob); };
}

}  // namespace detail

/// chi law: R = sqrt(chi^2_k).  With a correlation-matrix shape this is the
/// Gaussian radial.
inline RadialLaw chi_radial(double k) {
    if (!(k >= 1.0)) throw InvalidParameterError("chi_radial: k must be >= 1");
    auto chi2 = std::make_shared<boost::math::chi_squared_distribution<double>>(k);
    RadialLaw law;
    law.cdf = [chi2](double x) {
        return x <= 0.0 ? 0.0 : boost::math::cdf(*chi2, x * x);
    };
    law.quantile = [chi2](double p) { return std::sqrt(boost::math::quantile(*chi2, p)); };
    law.sampler = [k](RngStream& rng) { return draw_chi(rng, k); };
    law.rv_index_at_zero = k;
    law.mda_class = MdaClass::Gumbel;
    // Hazard rate of the chi law; a valid von Mises scaling function,
    // asymptotically x.
    law.scaling_w = [chi2](double x) {
        const double sf = boost::math::cdf(boost::math::complement(*chi2, x * x));
        const double pdf = 2.0 * x * boost::math::pdf(*chi2, x * x);
        return pdf / sf;
    };
    law.upper_endpoint = kInf;
    // E{1/R} = Gamma((k-1)/2) / (sqrt(2) Gamma(k/2)), finite for k > 1.
    law.mean_inverse = (k > 1.0)
        ? std::exp(std::lgamma(0.5 * (k - 1.0)) - std::lgamma(0.5 * k)) / std::sqrt(2.0)
        : kInf;
    law.name = "chi(" + std::to_string(k) + ")";
    law.is_chi = true;
    law.chi_dof = k;
    return law;
}

/// Degenerate radius R = c.
inline RadialLaw point_mass_radial(double c) {
    if (!(c > 0.0)) throw InvalidParameterError("point_mass_radial: c must be > 0");
    RadialLaw law;
    law.cdf = [c](double x) { return x >= c ? 1.0 : 0.0; };
    law.quantile = [c](double) { return c; };
    law.sampler = [c](RngStream&) { return c; };
    law.rv_index_at_zero = kInf;
    law.upper_endpoint = c;
    law.mean_inverse = 1.0 / c;
    law.name = "point_mass(" + std::to_string(c) + ")";
    return law;
}

/// Power law on (0,1): F(r) = r^theta.  Explicit RV index theta at 0.
inline RadialLaw power_radial(double theta) {
    if (!(theta > 0.0)) throw InvalidParameterError("power_radial: theta must be > 0");
    RadialLaw law;
    law.cdf = [theta](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return std::pow(x, theta);
    };
    law.quantile = [theta](double p) { return std::pow(p, 1.0 / theta); };
    law.sampler = [theta](RngStream& rng) { return std::pow(rng.uniform(), 1.0 / theta); };
    law.rv_index_at_zero = theta;
    law.mda_class = MdaClass::Weibull;
    law.weibull_alpha = 1.0;  // 1 - F(1-s) ~ theta s
    law.upper_endpoint = 1.0;
    law.mean_inverse = theta > 1.0 ? theta / (theta - 1.0) : kInf;
    law.name = "power(" + std::to_string(theta) + ")";
    return law;
}

/// R^2 ~ Beta(a,b): bounded radius on (0,1) with RV index 2a at 0 and
/// Weibull-MDA index b at the endpoint.
inline RadialLaw beta_sq_radial(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw InvalidParameterError("beta_sq_radial: shapes must be > 0");
    auto beta = std::make_shared<boost::math::beta_distribution<double>>(a, b);
    RadialLaw law;
    law.cdf = [beta](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return boost::math::cdf(*beta, x * x);
    };
    law.quantile = [beta](double p) { return std::sqrt(boost::math::quantile(*beta, p)); };
    law.sampler = [a, b](RngStream& rng) { return std::sqrt(sample_beta(a, b, rng)); };
    law.rv_index_at_zero = 2.0 * a;
    law.mda_class = MdaClass::Weibull;
    law.weibull_alpha = b;
    law.upper_endpoint = 1.0;
    // E[Beta(a,b)^{-1/2}] = B(a-1/2,b)/B(a,b), finite for a > 1/2.
    law.mean_inverse = (a > 0.5)
        ? std::exp(std::lgamma(a - 0.5) + std::lgamma(a + b) -
                   std::lgamma(a) - std::lgamma(a + b - 0.5))
        : kInf;
    law.name = "beta_sq(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return law;
}

/// Law of the product S * R for independent S, R given by handles.
/// CDF mixes the base CDF over 512 Gauss-Legendre nodes of the S quantile
/// space, then is frozen into a lookup table.
inline RadialLaw product_radial(const std::function<double(double)>& s_quantile,
                                std::function<double(RngStream&)> s_sampler,
                                double s_rv_index, double s_upper,
                                const RadialLaw& base, const std::string& name) {
    std::vector<double> nodes, weights;
    detail::unit_gl(512, nodes, weights);
    auto s_at_nodes = std::make_shared<std::vector<double>>(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) (*s_at_nodes)[i] = s_quantile(nodes[i]);

    auto base_cdf = base.cdf;
    auto w = std::make_shared<std::vector<double>>(std::move(weights));
    auto slow_cdf = [s_at_nodes, w, base_cdf](double x) {
        if (x <= 0.0) return 0.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < s_at_nodes->size(); ++i)
            sum += (*w)[i] * base_cdf(x / (*s_at_nodes)[i]);
        return std::min(1.0, sum);
    };

    const double upper = s_upper * base.upper_endpoint;
    const double hi_hint = std::isfinite(upper)
                               ? upper
                               : s_quantile(0.999999) * base.quantile(0.999999);

    RadialLaw law;
    detail::attach_table(law, detail::tabulate_cdf(slow_cdf, hi_hint, upper));
    auto base_sampler = base.sampler;
    law.sampler = [s_sampler, base_sampler](RngStream& rng) {
        return s_sampler(rng) * base_sampler(rng);
    };
    law.rv_index_at_zero = std::min(s_rv_index, base.rv_index_at_zero);
    law.upper_endpoint = upper;
    // E{1/(S R)} = E{1/S} E{1/R} by independence; E{1/S} is finite only when
    // the RV index of S at 0 exceeds 1 (or S is bounded away from 0).
    if (s_rv_index > 1.0 && std::isfinite(base.mean_inverse)) {
        double s_mean_inv = 0.0;
        for (std::size_t i = 0; i < s_at_nodes->size(); ++i)
            s_mean_inv += (*w)[i] / (*s_at_nodes)[i];
        law.mean_inverse = s_mean_inv * base.mean_inverse;
    } else {
        law.mean_inverse = kInf;
    }
    law.name = name;
    return law;
}

/// Dimension drop (k -> m < k): law of R_m with R_m^2 = R_k^2 * B_{m/2,(k-m)/2}.
/// The sampler draws the (R_k, Beta) pair; the CDF mixes the smooth Beta CDF
/// over the quantiles of R_k and is frozen into a lookup table.
inline RadialLaw marginal_radial(const RadialLaw& h_k, std::size_t k, std::size_t m) {
    if (k < 2) throw InvalidDimensionError("marginal_radial: k must be >= 2");
    if (m < 1 || m >= k) throw InvalidDimensionError("marginal_radial: need 1 <= m < k");
    const double a = 0.5 * static_cast<double>(m);
    const double b = 0.5 * static_cast<double>(k - m);
    auto beta = std::make_shared<boost::math::beta_distribution<double>>(a, b);

    std::vector<double> nodes, weights;
    detail::unit_gl(512, nodes, weights);
    auto r_at_nodes = std::make_shared<std::vector<double>>(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) (*r_at_nodes)[i] = h_k.quantile(nodes[i]);
    auto w = std::make_shared<std::vector<double>>(std::move(weights));

    auto slow_cdf = [beta, r_at_nodes, w](double z) {
        if (z <= 0.0) return 0.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < r_at_nodes->size(); ++i) {
            const double r = (*r_at_nodes)[i];
            const double t = (z >= r) ? 1.0 : (z * z) / (r * r);
            sum += (*w)[i] * boost::math::cdf(*beta, t);
        }
        return std::min(1.0, sum);
    };

    const double hi_hint =
        std::isfinite(h_k.upper_endpoint) ? h_k.upper_endpoint : h_k.quantile(0.999999);

    RadialLaw law;
    detail::attach_table(law, detail::tabulate_cdf(slow_cdf, hi_hint, h_k.upper_endpoint));
    auto hk_sampler = h_k.sampler;
    law.sampler = [hk_sampler, a, b](RngStream& rng) {
        const double r = hk_sampler(rng);
        return std::sqrt(r * r * sample_beta(a, b, rng));
    };
    law.rv_index_at_zero = std::min(h_k.rv_index_at_zero, static_cast<double>(m));
    law.upper_endpoint = h_k.upper_endpoint;
    // E{1/R_m} = E{1/R_k} E{B^{-1/2}}; the Beta factor is finite for m >= 2.
    law.mean_inverse =
        (m >= 2 && std::isfinite(h_k.mean_inverse))
            ? h_k.mean_inverse * std::exp(std::lgamma(a - 0.5) + std::lgamma(a + b) -
                                          std::lgamma(a) - std::lgamma(a + b - 0.5))
            : kInf;
    law.name = "marginal(" + h_k.name + "," + std::to_string(m) + ")";
    return law;
}

/// Size-biased transform: KH(z) = int_0^z r^{-1} dH(r) / E{1/R}.
/// Inverse-CDF lookup table with 4096 nodes, log-spaced toward both
/// probability endpoints; quantiles are read off the forward table by
/// bisection so the CDF residual of a round trip stays below 1e-8.
inline RadialLaw kh_law(const RadialLaw& h_next) {
    // Degenerate input: KH of a point mass is the same point mass.
    {
        const double q_lo = h_next.quantile(1e-9);
        const double q_hi = h_next.quantile(1.0 - 1e-9);
        if (q_hi - q_lo <= 1e-12 * std::max(1.0, std::abs(q_hi)))
            return point_mass_radial(0.5 * (q_lo + q_hi));
    }
    if (!(h_next.mean_inverse < kInf) && !(h_next.rv_index_at_zero > 1.0))
        throw UnsupportedLawError("kh_law: requires E{1/R} < inf");

    constexpr std::size_t kNodes = 4096;
    constexpr double kEdge = 1e-12;
    std::vector<double> u(kNodes);
    const std::size_t half = kNodes / 2;
    // Probability grid: log-spaced in u on (kEdge, 1/2], log-spaced in 1-u on
    // [1/2, 1-kEdge); the z-knots inherit the log spacing near 0.
    for (std::size_t i = 0; i < half; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(half - 1);
        u[i] = std::exp(std::log(kEdge) * (1.0 - t) + std::log(0.5) * t);
        u[kNodes - 1 - i] = 1.0 - u[i];
    }

    // Cumulative T(u) = int_0^u dv / quantile(v) per segment (GL-8), plus a
    // fitted-power head correction below the first node.
    const auto& q = h_next.quantile;
    std::vector<double> cum(kNodes, 0.0);
    const double q0 = q(u[0]);
    const double q1 = q(u[1]);
    // Local power fit quantile(v) ~ c v^{1/g}: head = g/(g-1) * u0/q(u0).
    const double g_fit = std::log(u[1] / u[0]) / std::log(q1 / q0);
    if (!(g_fit > 1.02) && !(h_next.rv_index_at_zero > 1.0))
        throw UnsupportedLawError("kh_law: integral of 1/r dH(r) diverges at 0");
    const double head = (g_fit > 1.0) ? (g_fit / (g_fit - 1.0)) * u[0] / q0 : u[0] / q0;
    cum[0] = head;
    for (std::size_t i = 1; i < kNodes; ++i) {
        cum[i] = cum[i - 1] +
                 integrate_gl([&](double v) { return 1.0 / q(v); }, u[i - 1], u[i], 8);
    }
    // Tail above the last node: 1/q is decreasing, so bound by the edge value.
    const double tail = kEdge / q(u.back());
    const double total = cum.back() + tail;

    std::vector<double> z(kNodes), p(kNodes);
    for (std::size_t i = 0; i < kNodes; ++i) {
        z[i] = q(u[i]);
        p[i] = cum[i] / total;
    }
    // Drop flat spots from discrete-ish quantiles.
    std::vector<double> zz, pp;
    zz.reserve(kNodes);
    pp.reserve(kNodes);
    for (std::size_t i = 0; i < kNodes; ++i) {
        if (!zz.empty() && !(z[i] > zz.back() * (1.0 + 1e-14) + 1e-300)) continue;
        zz.push_back(z[i]);
        pp.push_back(p[i]);
    }
    auto table = std::make_shared<MonotoneCubic>(std::move(zz), std::move(pp));

    RadialLaw law;
    detail::attach_table(law, table);
    auto quantile = law.quantile;
    law.sampler = [quantile](RngStream& rng) { return quantile(rng.uniform()); };
    // dKH ~ r^{gamma-2} dr near 0 when H is RV_gamma, so the index drops by 1.
    law.rv_index_at_zero = std::isnan(h_next.rv_index_at_zero)
                               ? std::numeric_limits<double>::quiet_NaN()
                               : std::max(h_next.rv_index_at_zero - 1.0, 0.0);
    law.upper_endpoint = h_next.upper_endpoint;
    law.mean_inverse = kInf;  // not propagated; recompute downstream if needed
    law.name = "kh(" + h_next.name + ")";
    return law;
}

}  // namespace extremal
