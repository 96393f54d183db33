// scale_law.hpp — laws for the positive scale factor S of spherical models.
//
// Model A: Weibullian upper tail P{S > x} = C1 x^{a1} exp(-L1 x^{p1}).
// Model B: upper endpoint 1 with P{S > 1 - x/u} / P{S > 1 - 1/u} -> x^gamma.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "errors.hpp"
#include "rng.hpp"
#include "rootfind.hpp"

namespace extremal {

enum class ScaleKind { Constant, ModelA, ModelB, Custom };

struct ScaleLaw {
    ScaleKind kind = ScaleKind::Constant;
    std::function<double(double)> cdf;
    std::function<double(double)> quantile;
    std::function<double(RngStream&)> sampler;

    double lower_bound = 0.0;  // kappa: S >= kappa almost surely
    double upper_endpoint = std::numeric_limits<double>::infinity();
    /// RV index of the CDF at 0 (inf when S is bounded away from 0).
    double rv_index_at_zero = std::numeric_limits<double>::infinity();
    /// Whether E{S^{-1-eps}} < inf for some eps > 0 (the kappa=0 fallback).
    bool neg_moment_finite = true;

    // Model A parameters (NaN otherwise).
    double c1 = std::numeric_limits<double>::quiet_NaN();
    double alpha1 = std::numeric_limits<double>::quiet_NaN();
    double l1 = std::numeric_limits<double>::quiet_NaN();
    double p1 = std::numeric_limits<double>::quiet_NaN();
    // Model B index (NaN otherwise).
    double gamma_b = std::numeric_limits<double>::quiet_NaN();

    std::string name;

    double sample(RngStream& rng) const { return sampler(rng); }
    bool is_constant_one() const {
        return kind == ScaleKind::Constant && lower_bound == upper_endpoint &&
               lower_bound == 1.0;
    }
};

inline ScaleLaw constant_scale(double c) {
    if (!(c > 0.0)) throw InvalidParameterError("constant_scale: c must be > 0");
    ScaleLaw s;
    s.kind = ScaleKind::Constant;
    s.cdf = [c](double x) { return x >= c ? 1.0 : 0.0; };
    s.quantile = [c](double) { return c; };
    s.sampler = [c](RngStream&) { return c; };
    s.lower_bound = c;
    s.upper_endpoint = c;
    s.name = "constant(" + std::to_string(c) + ")";
    return s;
}

/// Model A with the survival made exact: P{S > x} = min(1, C1 x^{a1} e^{-L1 x^{p1}})
/// past the point x0 where the raw expression crosses 1 while decreasing.
/// Requires the raw expression to reach 1 (otherwise there is no valid law
/// with this exact tail); S >= x0 almost surely.
inline ScaleLaw model_a_scale(double c1, double alpha1, double l1, double p1) {
    if (!(c1 > 0.0) || !(l1 > 0.0) || !(p1 > 0.0))
        throw InvalidParameterError("model_a_scale: C1, L1, p1 must be > 0");
    auto raw_sf = [c1, alpha1, l1, p1](double x) {
        return c1 * std::pow(x, alpha1) * std::exp(-l1 * std::pow(x, p1));
    };
    // Argmax of the raw survival: x* = (alpha1/(L1 p1))^{1/p1} when alpha1 > 0.
    const double x_peak = alpha1 > 0.0 ? std::pow(alpha1 / (l1 * p1), 1.0 / p1) : 0.0;
    const double peak = alpha1 > 0.0 ? raw_sf(x_peak)
                                     : (alpha1 == 0.0 ? c1 : std::numeric_limits<double>::infinity());
    if (!(peak >= 1.0))
        throw InvalidParameterError(
            "model_a_scale: survival never reaches 1; enlarge C1");
    // Decreasing-branch crossing of 1.
    double x0 = 0.0;
    if (peak > 1.0) {
        double hi = std::max(x_peak, 1.0);
        while (raw_sf(hi) > 1.0) hi *= 2.0;
        x0 = find_root([&](double x) { return raw_sf(x) - 1.0; },
                       x_peak > 0.0 ? x_peak : std::min(1e-12, hi * 1e-12), hi);
    } else {
        x0 = x_peak;
    }

    auto sf = [raw_sf, x0](double x) { return x <= x0 ? 1.0 : std::min(1.0, raw_sf(x)); };
    ScaleLaw s;
    s.kind = ScaleKind::ModelA;
    s.cdf = [sf](double x) { return x <= 0.0 ? 0.0 : 1.0 - sf(x); };
    s.quantile = [sf, x0](double p) {
        if (p <= 0.0) return x0;
        double hi = std::max(1.0, 2.0 * x0 + 1.0);
        while (sf(hi) > 1.0 - p) hi *= 2.0;
        return find_root([&](double x) { return (1.0 - sf(x)) - p; }, x0, hi);
    };
    auto quantile = s.quantile;
    s.sampler = [quantile](RngStream& rng) { return quantile(rng.uniform()); };
    s.lower_bound = x0;
    s.upper_endpoint = std::numeric_limits<double>::infinity();
    s.rv_index_at_zero = x0 > 0.0 ? std::numeric_limits<double>::infinity() : p1;
    s.neg_moment_finite = true;
    s.c1 = c1;
    s.alpha1 = alpha1;
    s.l1 = l1;
    s.p1 = p1;
    s.name = "model_a";
    return s;
}

/// Model B with the endpoint behaviour made exact:
/// P{S > 1 - x} = x^gamma on (0,1), i.e. F(s) = 1 - (1-s)^gamma.
/// gamma = 0 degenerates to S = 1 (the Gaussian case).
inline ScaleLaw model_b_scale(double gamma) {
    if (!(gamma >= 0.0)) throw InvalidParameterError("model_b_scale: gamma must be >= 0");
    if (gamma == 0.0) {
        ScaleLaw s = constant_scale(1.0);
        s.kind = ScaleKind::ModelB;
        s.gamma_b = 0.0;
        s.name = "model_b(0)";
        return s;
    }
    ScaleLaw s;
    s.kind = ScaleKind::ModelB;
    s.cdf = [gamma](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return 1.0 - std::pow(1.0 - x, gamma);
    };
    s.quantile = [gamma](double p) { return 1.0 - std::pow(1.0 - p, 1.0 / gamma); };
    auto quantile = s.quantile;
    s.sampler = [quantile](RngStream& rng) { return quantile(rng.uniform()); };
    s.lower_bound = 0.0;
    s.upper_endpoint = 1.0;
    s.rv_index_at_zero = 1.0;  // F(x) ~ gamma x near 0
    s.neg_moment_finite = false;
    s.gamma_b = gamma;
    s.name = "model_b(" + std::to_string(gamma) + ")";
    return s;
}

/// Power scale on (0,1): F(s) = s^theta; regularly varying at 0 with index
/// theta.  Used for scale mixtures that tilt the minima index.
inline ScaleLaw power_scale(double theta) {
    if (!(theta > 0.0)) throw InvalidParameterError("power_scale: theta must be > 0");
    ScaleLaw s;
    s.kind = ScaleKind::Custom;
    s.cdf = [theta](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return std::pow(x, theta);
    };
    s.quantile = [theta](double p) { return std::pow(p, 1.0 / theta); };
    s.sampler = [theta](RngStream& rng) { return std::pow(rng.uniform(), 1.0 / theta); };
    s.lower_bound = 0.0;
    s.upper_endpoint = 1.0;
    s.rv_index_at_zero = theta;
    s.neg_moment_finite = theta > 1.0;
    s.name = "power_scale(" + std::to_string(theta) + ")";
    return s;
}

inline ScaleLaw custom_scale(std::function<double(double)> cdf,
                             std::function<double(double)> quantile,
                             std::function<double(RngStream&)> sampler, double kappa,
                             double upper, bool neg_moment_finite = false) {
    if (!(kappa >= 0.0)) throw InvalidParameterError("custom_scale: kappa must be >= 0");
    ScaleLaw s;
    s.kind = ScaleKind::Custom;
    s.cdf = std::move(cdf);
    s.quantile = std::move(quantile);
    s.sampler = std::move(sampler);
    s.lower_bound = kappa;
    s.upper_endpoint = upper;
    s.rv_index_at_zero = kappa > 0.0 ? std::numeric_limits<double>::infinity()
                                     : std::numeric_limits<double>::quiet_NaN();
    s.neg_moment_finite = neg_moment_finite || kappa > 0.0;
    s.name = "custom";
    return s;
}

/// Uniform scale on [lo, hi]; handy bounded-below test law for the
/// Penrose-Kabluchko machinery.
inline ScaleLaw uniform_scale(double lo, double hi) {
    if (!(0.0 <= lo) || !(lo < hi))
        throw InvalidParameterError("uniform_scale: need 0 <= lo < hi");
    const double width = hi - lo;
    ScaleLaw s;
    s.kind = ScaleKind::Custom;
    s.cdf = [lo, hi, width](double x) {
        if (x <= lo) return 0.0;
        if (x >= hi) return 1.0;
        return (x - lo) / width;
    };
    s.quantile = [lo, width](double p) { return lo + p * width; };
    s.sampler = [lo, width](RngStream& rng) { return lo + width * rng.uniform(); };
    s.lower_bound = lo;
    s.upper_endpoint = hi;
    s.rv_index_at_zero = lo > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
    s.neg_moment_finite = lo > 0.0;
    s.name = "uniform_scale";
    return s;
}

}  // namespace extremal
