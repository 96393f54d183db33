#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "extremal/elliptical.hpp"
#include "extremal/spherical.hpp"
#include "extremal/stats.hpp"
#include "oracles.hpp"

using extremal::RngStream;

namespace {

Eigen::MatrixXd corr2(double rho) {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, rho, rho, 1.0;
    return m;
}

}  // namespace

TEST_CASE("identity sigma with chi_k radial gives iid standard normals", "[elliptical]") {
    const std::size_t k = 3, n = 100000;
    extremal::EllipticalSpec spec{k, Eigen::MatrixXd::Identity(k, k),
                                  extremal::chi_radial(static_cast<double>(k))};
    RngStream rng(101, 0);
    const auto rows = extremal::sample_elliptical(spec, n, rng);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = rows[i * k + j];
        REQUIRE(extremal::ks_distance(col, oracle::normal_cdf) <
                extremal::ks_critical(n, 0.01));
    }
}

TEST_CASE("generic radial path agrees with the Gaussian fast path in law", "[elliptical]") {
    // Force the generic (R, U) route by dropping the chi marker.
    extremal::RadialLaw generic = extremal::chi_radial(2.0);
    generic.is_chi = false;
    extremal::EllipticalSpec fast{2, corr2(0.6), extremal::chi_radial(2.0)};
    extremal::EllipticalSpec slow{2, corr2(0.6), generic};
    RngStream r1(102, 0), r2(102, 1);
    const std::size_t n = 100000;
    const auto a = extremal::sample_elliptical(fast, n, r1);
    const auto b = extremal::sample_elliptical(slow, n, r2);
    std::vector<double> ca(n), cb(n);
    for (std::size_t i = 0; i < n; ++i) {
        ca[i] = a[i * 2 + 1];
        cb[i] = b[i * 2 + 1];
    }
    REQUIRE(extremal::ks_two_sample(ca, cb) <
            extremal::ks_two_sample_critical(n, n, 0.01));
}

TEST_CASE("degenerate correlation is rejected", "[elliptical]") {
    extremal::EllipticalSpec spec{2, corr2(1.0), extremal::chi_radial(2.0)};
    RngStream rng(1, 0);
    REQUIRE_THROWS_AS(extremal::sample_elliptical(spec, 1, rng),
                      extremal::NotPositiveDefiniteError);
}

TEST_CASE("correlation 0.5 with chi_2 radial reproduces Pearson 0.5", "[elliptical]") {
    extremal::EllipticalSpec spec{2, corr2(0.5), extremal::chi_radial(2.0)};
    RngStream rng(103, 0);
    const std::size_t n = 100000;
    const auto rows = extremal::sample_elliptical(spec, n, rng);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = rows[i * 2], y = rows[i * 2 + 1];
        sxy += x * y;
        sxx += x * x;
        syy += y * y;
    }
    REQUIRE(std::abs(sxy / std::sqrt(sxx * syy) - 0.5) < 0.02);
}

TEST_CASE("all coordinates share one marginal law", "[elliptical]") {
    // Non-Gaussian radial, mixed correlations; X_i all equal X_1 in law.
    Eigen::MatrixXd sigma(3, 3);
    sigma << 1.0, 0.5, 0.2,
             0.5, 1.0, 0.4,
             0.2, 0.4, 1.0;
    extremal::EllipticalSpec spec{3, sigma, extremal::beta_sq_radial(1.0, 2.0)};
    const std::size_t n = 100000;
    RngStream r1(104, 0), r2(104, 1);
    const auto a = extremal::sample_elliptical(spec, n, r1);
    const auto b = extremal::sample_elliptical(spec, n, r2);
    for (std::size_t j = 1; j < 3; ++j) {
        std::vector<double> c0(n), cj(n);
        for (std::size_t i = 0; i < n; ++i) {
            c0[i] = a[i * 3];           // coordinate 1, first run
            cj[i] = b[i * 3 + j];       // coordinate j, independent run
        }
        REQUIRE(extremal::ks_two_sample(c0, cj) <
                extremal::ks_two_sample_critical(n, n, 0.01));
    }
}

TEST_CASE("spherical process with S == 1 has standard normal marginals", "[spherical]") {
    const auto kernel = extremal::constant_kernel(1.0, 1.0);
    const std::vector<double> grid{0.0, 1.0};
    RngStream rng(105, 0);
    const std::size_t n = 100000;
    const auto rows = extremal::sample_spherical_process(
        kernel, extremal::constant_scale(1.0), grid, extremal::ScaleMode::ScalarS, n, rng);
    for (std::size_t j = 0; j < 2; ++j) {
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = rows[i * 2 + j];
        REQUIRE(extremal::ks_distance(col, oracle::normal_cdf) <
                extremal::ks_critical(n, 0.01));
    }
}

TEST_CASE("scalar Model A scale: symmetric mean and variance E S^2", "[spherical]") {
    // Model A with p1=2, L1=1/2, C1=1, alpha1=0: survival exp(-x^2/2), so
    // S^2 ~ Exp(1/2) and E S^2 = 2.
    const auto scale = extremal::model_a_scale(1.0, 0.0, 0.5, 2.0);
    const auto kernel = extremal::constant_kernel(1.0, 1.0);
    const std::vector<double> grid{0.0};
    RngStream rng(106, 0);
    const std::size_t n = 100000;
    const auto rows = extremal::sample_spherical_process(
        kernel, scale, grid, extremal::ScaleMode::ScalarS, n, rng);
    double s1 = 0.0, s2 = 0.0;
    for (double x : rows) {
        s1 += x;
        s2 += x * x;
    }
    const double mean = s1 / static_cast<double>(n);
    const double var = s2 / static_cast<double>(n);
    REQUIRE(std::abs(mean) < 3.0 * std::sqrt(2.0 / static_cast<double>(n)));
    REQUIRE(std::abs(var - 2.0) / 2.0 < 0.02);
}

TEST_CASE("path-S mode requires a path sampler and runs with one", "[spherical]") {
    const auto kernel = extremal::brownian_kernel();
    const std::vector<double> grid{0.5, 1.0};
    const auto scale = extremal::uniform_scale(0.5, 1.5);
    RngStream rng(107, 0);
    REQUIRE_THROWS_AS(
        extremal::SphericalProcessSampler(kernel, grid, scale, extremal::ScaleMode::PathS),
        extremal::InvalidParameterError);
    extremal::SphericalProcessSampler sampler(kernel, grid, scale,
                                              extremal::ScaleMode::PathS,
                                              extremal::iid_scale_path(scale));
    const auto path = sampler.draw(rng);
    REQUIRE(path.size() == 2);
}
