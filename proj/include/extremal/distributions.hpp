// distributions.hpp — scalar sampling primitives on top of RngStream.
//
// All draws are deterministic functions of the stream, with fixed algorithms
// (no libc/stdlib distribution objects), so output is stable across
// platforms and standard libraries.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace extremal {

inline constexpr double kPi = 3.14159265358979323846;

/// Standard exponential via inversion.
inline double draw_exponential(RngStream& rng) {
    return -std::log(rng.uniform());
}

/// Box-Muller pair of independent standard normals.
inline std::pair<double, double> draw_normal_pair(RngStream& rng) {
    const double r = std::sqrt(-2.0 * std::log(rng.uniform()));
    const double theta = 2.0 * kPi * rng.uniform();
    return {r * std::cos(theta), r * std::sin(theta)};
}

inline double draw_normal(RngStream& rng) {
    return draw_normal_pair(rng).first;
}

/// Fill a buffer with standard normals, consuming whole Box-Muller pairs.
inline void fill_normal(RngStream& rng, std::span<double> out) {
    std::size_t i = 0;
    for (; i + 1 < out.size(); i += 2) {
        auto [a, b] = draw_normal_pair(rng);
        out[i] = a;
        out[i + 1] = b;
    }
    if (i < out.size()) out[i] = draw_normal(rng);
}

/// Gamma(shape, scale 1) by Marsaglia-Tsang squeeze; shape < 1 via the
/// boosting identity G(a) = G(a+1) * U^{1/a}.
inline double draw_gamma(RngStream& rng, double shape) {
    if (!(shape > 0.0)) throw InvalidParameterError("draw_gamma: shape must be > 0");
    if (shape < 1.0) {
        const double u = rng.uniform();
        return draw_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = draw_normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

/// Beta(a,b) draw in (0,1).
/// Matches the density Gamma(a+b)/(Gamma(a)Gamma(b)) x^{a-1}(1-x)^{b-1}.
inline double sample_beta(double a, double b, RngStream& rng) {
    if (!(a > 0.0) || !(b > 0.0))
        throw InvalidParameterError("sample_beta: shapes must be > 0");
    const double x = draw_gamma(rng, a);
    const double y = draw_gamma(rng, b);
    const double s = x + y;
    if (s <= 0.0) return 0.5;  // underflow guard for tiny shapes
    return x / s;
}

/// chi-distributed draw: R >= 0 with R^2 ~ chi^2_k (k need not be integral).
inline double draw_chi(RngStream& rng, double k) {
    return std::sqrt(2.0 * draw_gamma(rng, 0.5 * k));
}

/// Poisson(mean) by product inversion; large means split exactly as
/// Poisson(m) = Poisson(m/2) + Poisson(m/2).
inline std::uint64_t draw_poisson(RngStream& rng, double mean) {
    if (!(mean >= 0.0)) throw InvalidParameterError("draw_poisson: mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean > 16.0) {
        const double half = 0.5 * mean;
        return draw_poisson(rng, half) + draw_poisson(rng, mean - half);
    }
    const double limit = std::exp(-mean);
    std::uint64_t count = 0;
    double prod = rng.uniform();
    while (prod > limit) {
        ++count;
        prod *= rng.uniform();
    }
    return count;
}

/// Uniform direction on the unit sphere of R^k (exact unit norm after
/// normalization).  Gaussian-vector normalization: dimension-uniform and
/// branch-free; k = 1 degenerates to a fair sign.
inline std::vector<double> sample_unit_sphere(std::size_t k, RngStream& rng) {
    if (k == 0) throw InvalidDimensionError("sample_unit_sphere: k must be >= 1");
    std::vector<double> u(k);
    if (k == 1) {
        u[0] = rng.uniform() < 0.5 ? -1.0 : 1.0;
        return u;
    }
    double norm2;
    do {
        fill_normal(rng, u);
        norm2 = 0.0;
        for (double v : u) norm2 += v * v;
    } while (norm2 <= 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : u) v *= inv;
    return u;
}

}  // namespace extremal
