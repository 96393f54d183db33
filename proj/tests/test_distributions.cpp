#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "extremal/distributions.hpp"
#include "extremal/stats.hpp"
#include "oracles.hpp"

using extremal::RngStream;

TEST_CASE("sample_unit_sphere k=1 is a fair sign", "[sphere]") {
    RngStream rng(11, 0);
    int plus = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto u = extremal::sample_unit_sphere(1, rng);
        REQUIRE((u[0] == 1.0 || u[0] == -1.0));
        if (u[0] > 0) ++plus;
    }
    REQUIRE(std::abs(plus / static_cast<double>(n) - 0.5) < 3.0 * 0.5 / std::sqrt(n));
}

TEST_CASE("sample_unit_sphere has exact unit norm and symmetric coordinates", "[sphere]") {
    RngStream rng(12, 0);
    const int n = 100000;
    std::vector<double> mean(3, 0.0);
    for (int i = 0; i < n; ++i) {
        const auto u = extremal::sample_unit_sphere(3, rng);
        double norm2 = 0.0;
        for (double v : u) norm2 += v * v;
        REQUIRE(std::abs(norm2 - 1.0) < 1e-12);
        for (int j = 0; j < 3; ++j) mean[j] += u[j];
    }
    // Coordinate variance is 1/k, so a 3-sigma window on the mean:
    const double sigma = std::sqrt(1.0 / 3.0 / n);
    for (int j = 0; j < 3; ++j) REQUIRE(std::abs(mean[j] / n) < 3.0 * sigma);
}

TEST_CASE("sample_unit_sphere coordinate second moment is 1/k", "[sphere]") {
    // E[U_1^2] = 1/k by exchangeability and the unit norm.
    RngStream rng(13, 0);
    const int n = 100000;
    double m2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto u = extremal::sample_unit_sphere(4, rng);
        m2 += u[0] * u[0];
    }
    REQUIRE(std::abs(m2 / n - 0.25) < 0.01);
}

TEST_CASE("sample_unit_sphere rejects k=0", "[sphere]") {
    RngStream rng(1, 0);
    REQUIRE_THROWS_AS(extremal::sample_unit_sphere(0, rng), extremal::InvalidDimensionError);
}

TEST_CASE("sample_beta means", "[beta]") {
    RngStream rng(21, 0);
    const int n = 100000;
    auto mean_of = [&](double a, double b) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = extremal::sample_beta(a, b, rng);
            REQUIRE(x > 0.0);
            REQUIRE(x < 1.0);
            s += x;
        }
        return s / n;
    };
    REQUIRE(std::abs(mean_of(1.0, 1.0) - 0.5) < 0.01);    // Beta(1,1) = U(0,1)
    REQUIRE(std::abs(mean_of(0.5, 0.5) - 0.5) < 0.01);    // symmetric
    REQUIRE(std::abs(mean_of(0.5, 1.5) - 0.25) < 0.01);   // a/(a+b)
}

TEST_CASE("sample_beta rejects nonpositive shapes", "[beta]") {
    RngStream rng(1, 0);
    REQUIRE_THROWS_AS(extremal::sample_beta(0.0, 1.0, rng), extremal::InvalidParameterError);
    REQUIRE_THROWS_AS(extremal::sample_beta(1.0, -2.0, rng), extremal::InvalidParameterError);
}

TEST_CASE("beta(1,1) matches the uniform CDF", "[beta]") {
    RngStream rng(22, 0);
    std::vector<double> draws(100000);
    for (auto& d : draws) d = extremal::sample_beta(1.0, 1.0, rng);
    const double ks = extremal::ks_distance(draws, [](double x) { return x; });
    REQUIRE(ks < extremal::ks_critical(draws.size(), 0.01));
}

TEST_CASE("normal draws match the normal CDF", "[normal]") {
    RngStream rng(23, 0);
    std::vector<double> draws(100000);
    extremal::fill_normal(rng, draws);
    const double ks = extremal::ks_distance(draws, oracle::normal_cdf);
    REQUIRE(ks < extremal::ks_critical(draws.size(), 0.01));
}

TEST_CASE("gamma mean and variance", "[gamma]") {
    RngStream rng(24, 0);
    const int n = 200000;
    for (double shape : {0.5, 1.0, 2.5}) {
        std::vector<double> draws(n);
        for (auto& d : draws) d = extremal::draw_gamma(rng, shape);
        REQUIRE(std::abs(oracle::mean(draws) - shape) < 4.0 * std::sqrt(shape / n));
        REQUIRE(std::abs(oracle::variance(draws) - shape) / shape < 0.05);
    }
}

TEST_CASE("poisson mean", "[poisson]") {
    RngStream rng(25, 0);
    const int n = 50000;
    for (double mean : {0.5, 2.0, 40.0}) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += static_cast<double>(extremal::draw_poisson(rng, mean));
        REQUIRE(std::abs(s / n - mean) < 4.0 * std::sqrt(mean / n));
    }
}
