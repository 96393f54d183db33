#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <vector>

#include "extremal/variogram.hpp"

namespace {

Eigen::MatrixXd mat2(double a, double b, double c, double d) {
    Eigen::MatrixXd m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_CASE("variogram_to_covariance, Brownian case", "[variogram]") {
    const auto kernel = extremal::brownian_kernel();
    const std::vector<double> grid{1.0, 2.0};
    const Eigen::MatrixXd c = extremal::variogram_to_covariance(kernel, grid);
    // C_12 = (1 + 2 - 1)/2 = 1.
    REQUIRE(c(0, 0) == Catch::Approx(1.0));
    REQUIRE(c(0, 1) == Catch::Approx(1.0));
    REQUIRE(c(1, 1) == Catch::Approx(2.0));
}

TEST_CASE("variogram_to_covariance degenerate kernels", "[variogram]") {
    const std::vector<double> grid{0.5, 1.5, 2.5};
    // Gamma == 0, sigma^2 == 1: fully dependent, all-ones covariance.
    const Eigen::MatrixXd ones =
        extremal::variogram_to_covariance(extremal::constant_kernel(0.0, 1.0), grid);
    REQUIRE(ones.isApprox(Eigen::MatrixXd::Ones(3, 3), 1e-14));
    // Gamma = 2 off the diagonal, sigma^2 == 1: independent components.
    const Eigen::MatrixXd id =
        extremal::variogram_to_covariance(extremal::constant_kernel(2.0, 1.0), grid);
    REQUIRE(id.isApprox(Eigen::MatrixXd::Identity(3, 3), 1e-14));
}

TEST_CASE("covariance -> variogram -> covariance round trip", "[variogram]") {
    Eigen::MatrixXd c(3, 3);
    c << 2.0, 0.3, 0.5,
         0.3, 1.0, 0.2,
         0.5, 0.2, 1.5;
    Eigen::MatrixXd gamma(3, 3);
    Eigen::VectorXd s2(3);
    for (int i = 0; i < 3; ++i) {
        s2(i) = c(i, i);
        for (int j = 0; j < 3; ++j) gamma(i, j) = c(i, i) + c(j, j) - 2.0 * c(i, j);
    }
    const Eigen::MatrixXd back = extremal::covariance_from_variogram(gamma, s2);
    REQUIRE(back.isApprox(c, 1e-14));
}

TEST_CASE("variogram_to_covariance rejects a non-PSD implied covariance", "[variogram]") {
    // Gamma too large relative to the variances.
    Eigen::MatrixXd gamma(2, 2);
    gamma << 0.0, 10.0, 10.0, 0.0;
    Eigen::VectorXd s2(2);
    s2 << 1.0, 1.0;
    REQUIRE_THROWS_AS(extremal::covariance_from_variogram(gamma, s2),
                      extremal::InvalidVariogramError);
}

TEST_CASE("Variogram matrix validation", "[variogram]") {
    REQUIRE_THROWS_AS(extremal::Variogram(mat2(0.0, -1.0, -1.0, 0.0)),
                      extremal::InvalidVariogramError);
    REQUIRE_THROWS_AS(extremal::Variogram(mat2(0.5, 1.0, 1.0, 0.0)),
                      extremal::InvalidVariogramError);
    REQUIRE_NOTHROW(extremal::Variogram(mat2(0.0, 1.0, 1.0, 0.0)));

    Eigen::MatrixXd bad(3, 3);
    bad << 0.0, 1.0, 1.0,
           1.0, 0.0, 10.0,
           1.0, 10.0, 0.0;
    const extremal::Variogram v(bad);
    REQUIRE_FALSE(v.is_valid_gaussian());
    REQUIRE_THROWS_AS(v.require_valid_gaussian(), extremal::InvalidVariogramError);

    Eigen::MatrixXd good(3, 3);
    good << 0.0, 1.0, 2.0,
            1.0, 0.0, 1.0,
            2.0, 1.0, 0.0;  // Brownian increments on {0,1,2}
    REQUIRE(extremal::Variogram(good).is_valid_gaussian());
}

TEST_CASE("sigma_from_gamma basics and round trip", "[variogram]") {
    const extremal::Variogram gamma(mat2(0.0, 1.0, 1.0, 0.0));
    const Eigen::MatrixXd sigma = extremal::sigma_from_gamma(gamma, 100.0);
    REQUIRE(sigma(0, 0) == 1.0);
    REQUIRE(sigma(0, 1) == Catch::Approx(0.99));
    const Eigen::MatrixXd back = extremal::gamma_from_sigma(sigma, 100.0);
    REQUIRE(back(0, 1) == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(back(0, 0) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("sigma_from_gamma approaches all-ones as c_n grows, staying PD", "[variogram]") {
    const extremal::Variogram gamma(mat2(0.0, 0.8, 0.8, 0.0));
    double prev_off = 0.0;
    for (double cn : {10.0, 100.0, 1000.0, 10000.0}) {
        const Eigen::MatrixXd sigma = extremal::sigma_from_gamma(gamma, cn);
        REQUIRE(sigma(0, 1) > prev_off);
        REQUIRE(extremal::smallest_eigenvalue(sigma) > 0.0);
        prev_off = sigma(0, 1);
    }
}

TEST_CASE("sigma_from_gamma errors", "[variogram]") {
    // Entries leave (0,1) when c_n is not above the largest entry.
    const extremal::Variogram gamma(mat2(0.0, 1.0, 1.0, 0.0));
    REQUIRE_THROWS_AS(extremal::sigma_from_gamma(gamma, 0.5),
                      extremal::InvalidParameterError);
    // Triangle-violating Gamma at small c_n: not PD, carries the eigenvalue.
    Eigen::MatrixXd bad(3, 3);
    bad << 0.0, 1.0, 1.0,
           1.0, 0.0, 10.0,
           1.0, 10.0, 0.0;
    try {
        (void)extremal::sigma_from_gamma(extremal::Variogram(bad), 12.0);
        FAIL("expected ScheduleTooEarlyError");
    } catch (const extremal::ScheduleTooEarlyError& e) {
        REQUIRE(e.smallest_eigenvalue < 0.0);
    }
}
