#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "extremal/rng.hpp"
#include "extremal/stats.hpp"

TEST_CASE("ecdf basics", "[stats]") {
    const std::vector<double> samples{1.0, 2.0, 3.0};
    const std::vector<double> grid{0.0, 2.0, 5.0};
    const auto v = extremal::ecdf(samples, grid);
    REQUIRE(v[0] == 0.0);                      // below min
    REQUIRE(v[1] == Catch::Approx(2.0 / 3.0)); // right-continuous at a jump
    REQUIRE(v[2] == 1.0);                      // above max
    REQUIRE_THROWS_AS(extremal::ecdf(std::vector<double>{}, grid),
                      extremal::InvalidParameterError);
}

TEST_CASE("ecdf is nondecreasing and within [0,1]", "[stats]") {
    extremal::RngStream rng(3, 0);
    std::vector<double> samples(1000);
    for (auto& s : samples) s = rng.uniform();
    std::vector<double> grid;
    for (int i = -5; i <= 25; ++i) grid.push_back(i * 0.05);
    const auto v = extremal::ecdf(samples, grid);
    for (std::size_t i = 0; i < v.size(); ++i) {
        REQUIRE(v[i] >= 0.0);
        REQUIRE(v[i] <= 1.0);
        if (i > 0) REQUIRE(v[i] >= v[i - 1]);
    }
}

TEST_CASE("uniform sample passes the DKW band at 99%", "[stats]") {
    extremal::RngStream rng(4, 0);
    std::vector<double> samples(100000);
    for (auto& s : samples) s = rng.uniform();
    const double radius = extremal::dkw_radius(samples.size(), 0.01);
    REQUIRE(radius == Catch::Approx(0.00515).margin(5e-5));
    const double ks = extremal::ks_distance(samples, [](double x) {
        return std::min(1.0, std::max(0.0, x));
    });
    REQUIRE(ks <= radius);
}

TEST_CASE("ks_distance on balanced quantile placement", "[stats]") {
    // Points at the (i - 1/2)/n quantiles of the target: distance = 1/(2n).
    const std::size_t n = 100;
    std::vector<double> samples(n);
    for (std::size_t i = 0; i < n; ++i)
        samples[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    const double ks = extremal::ks_distance(samples, [](double x) { return x; });
    REQUIRE(ks <= 0.5 / n + 1e-12);
}

TEST_CASE("ks_distance against a constant cdf", "[stats]") {
    std::vector<double> samples{0.1, 0.4, 0.6, 0.9};
    const double ks = extremal::ks_distance(samples, [](double) { return 0.5; });
    REQUIRE(ks >= 0.5 - 1.0 / samples.size());
}

TEST_CASE("two-sample ks of identical laws stays under the critical value", "[stats]") {
    extremal::RngStream rng(5, 0);
    std::vector<double> a(20000), b(20000);
    for (auto& x : a) x = rng.uniform();
    for (auto& x : b) x = rng.uniform();
    REQUIRE(extremal::ks_two_sample(a, b) <
            extremal::ks_two_sample_critical(a.size(), b.size(), 0.01));
    // And it detects a genuinely different law.
    for (auto& x : b) x = std::pow(rng.uniform(), 2.0);
    REQUIRE(extremal::ks_two_sample(a, b) >
            extremal::ks_two_sample_critical(a.size(), b.size(), 0.01));
}
