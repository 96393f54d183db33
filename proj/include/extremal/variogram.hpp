// variogram.hpp — incremental-variance objects and covariance conversions.
//
// Matrix form: k x k symmetric Gamma with zero diagonal and positive
// off-diagonal entries.  Kernel form: Gamma(s,t) evaluated on grids.  The
// covariance implied by a variogram and a variance vector is
// C_ij = (s2_i + s2_j - Gamma_ij)/2.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace extremal {

/// PSD tolerance: reject only when the smallest eigenvalue drops below
/// -1e-10 times the largest.
inline constexpr double kPsdRelTol = 1e-10;
/// Largest diagonal jitter the Cholesky repair may add.
inline constexpr double kMaxCholeskyJitter = 1e-12;

struct CholeskyResult {
    Eigen::MatrixXd lower;
    double jitter = 0.0;  // diagonal shift that was needed (0 if none)
};

inline double smallest_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

/// Cholesky factor of a (numerically) PSD matrix.  Exactly singular or
/// slightly indefinite inputs within the PSD tolerance are repaired with a
/// diagonal jitter up to kMaxCholeskyJitter; anything worse throws.
inline CholeskyResult cholesky_psd(const Eigen::MatrixXd& m,
                                   const std::string& context = "cholesky_psd") {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() == Eigen::Success)
        return {Eigen::MatrixXd(llt.matrixL()), 0.0};

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo < -kPsdRelTol * std::max(hi, 0.0))
        throw NotPositiveDefiniteError(context + ": matrix is not positive semi-definite (min eigenvalue " +
                                       std::to_string(lo) + ")");
    for (double jitter = 1e-15; jitter <= kMaxCholeskyJitter * 1.0000001; jitter *= 10.0) {
        Eigen::MatrixXd shifted = m;
        shifted.diagonal().array() += jitter * std::max(hi, 1.0);
        Eigen::LLT<Eigen::MatrixXd> retry(shifted);
        if (retry.info() == Eigen::Success)
            return {Eigen::MatrixXd(retry.matrixL()), jitter * std::max(hi, 1.0)};
    }
    throw NotPositiveDefiniteError(context + ": Cholesky failed within the jitter budget");
}

/// Variogram in matrix form.
class Variogram {
  public:
    explicit Variogram(Eigen::MatrixXd gamma) : gamma_(std::move(gamma)) {
        const auto k = gamma_.rows();
        if (k < 1 || gamma_.cols() != k)
            throw InvalidVariogramError("Variogram: matrix must be square");
        for (Eigen::Index i = 0; i < k; ++i) {
            if (gamma_(i, i) != 0.0)
                throw InvalidVariogramError("Variogram: diagonal must be zero");
            for (Eigen::Index j = i + 1; j < k; ++j) {
                if (gamma_(i, j) != gamma_(j, i))
                    throw InvalidVariogramError("Variogram: matrix must be symmetric");
                if (!(gamma_(i, j) > 0.0) || !std::isfinite(gamma_(i, j)))
                    throw InvalidVariogramError(
                        "Variogram: off-diagonal entries must be in (0,inf)");
            }
        }
    }

    std::size_t dim() const { return static_cast<std::size_t>(gamma_.rows()); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return gamma_(i, j); }
    const Eigen::MatrixXd& matrix() const { return gamma_; }

    /// Validity as a Gaussian variogram: with anchor index 0, the matrix
    /// M_ij = (g_i0 + g_j0 - g_ij)/2 over i,j >= 1 must be PSD.
    bool is_valid_gaussian() const {
        const auto k = gamma_.rows();
        if (k < 2) return true;
        Eigen::MatrixXd m(k - 1, k - 1);
        for (Eigen::Index i = 1; i < k; ++i)
            for (Eigen::Index j = 1; j < k; ++j)
                m(i - 1, j - 1) = 0.5 * (gamma_(i, 0) + gamma_(j, 0) - gamma_(i, j));
        return smallest_eigenvalue(m) >= -kPsdRelTol * std::max(1.0, m.diagonal().maxCoeff());
    }

    void require_valid_gaussian() const {
        if (!is_valid_gaussian())
            throw InvalidVariogramError(
                "Variogram: no Gaussian vector has these incremental variances");
    }

  private:
    Eigen::MatrixXd gamma_;
};

/// A Gaussian process handle: incremental variance kernel plus a variance
/// function.
struct GaussianKernel {
    std::function<double(double, double)> variogram;  // Gamma(s,t)
    std::function<double(double)> variance;           // sigma^2(t) >= 0
};

inline GaussianKernel brownian_kernel(double scale = 1.0) {
    return {[scale](double s, double t) { return scale * std::abs(s - t); },
            [scale](double t) { return scale * std::abs(t); }};
}

/// Fractional-Brownian variogram |s-t|^{2H} with variance |t|^{2H}.
inline GaussianKernel fbm_kernel(double hurst, double scale = 1.0) {
    if (!(hurst > 0.0) || !(hurst < 1.0))
        throw InvalidParameterError("fbm_kernel: hurst must be in (0,1)");
    return {[scale, hurst](double s, double t) {
                return scale * std::pow(std::abs(s - t), 2.0 * hurst);
            },
            [scale, hurst](double t) { return scale * std::pow(std::abs(t), 2.0 * hurst); }};
}

/// Gamma(s,t) = c for s != t with constant variance v: exchangeable field.
inline GaussianKernel constant_kernel(double c, double variance = 1.0) {
    return {[c](double s, double t) { return s == t ? 0.0 : c; },
            [variance](double) { return variance; }};
}

/// Evaluate a kernel's variogram on a grid (matrix form).
inline Eigen::MatrixXd variogram_on_grid(const GaussianKernel& kernel,
                                         std::span<const double> grid) {
    const Eigen::Index k = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd g(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            g(i, j) = (i == j) ? 0.0 : kernel.variogram(grid[i], grid[j]);
    return g;
}

/// C_ij = (s2_i + s2_j - Gamma_ij)/2 from matrix data; PSD-checked.
inline Eigen::MatrixXd covariance_from_variogram(const Eigen::MatrixXd& gamma,
                                                 const Eigen::VectorXd& sigma2) {
    const auto k = gamma.rows();
    if (sigma2.size() != k)
        throw InvalidVariogramError("covariance_from_variogram: size mismatch");
    Eigen::MatrixXd c(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            c(i, j) = 0.5 * (sigma2(i) + sigma2(j) - gamma(i, j));
    const double lo = smallest_eigenvalue(c);
    const double hi = std::max(1e-300, c.diagonal().maxCoeff());
    if (lo < -kPsdRelTol * hi)
        throw InvalidVariogramError(
            "covariance_from_variogram: implied covariance is not PSD (min eigenvalue " +
            std::to_string(lo) + ")");
    return c;
}

/// Kernel-on-grid version; grid points must be distinct and variances
/// nonnegative.
inline Eigen::MatrixXd variogram_to_covariance(const GaussianKernel& kernel,
                                               std::span<const double> grid) {
    if (grid.empty()) throw InvalidParameterError("variogram_to_covariance: empty grid");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw InvalidParameterError("variogram_to_covariance: grid must be increasing");
    const Eigen::Index k = static_cast<Eigen::Index>(grid.size());
    Eigen::VectorXd s2(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        s2(i) = kernel.variance(grid[i]);
        if (s2(i) < 0.0)
            throw InvalidParameterError("variogram_to_covariance: negative variance");
    }
    Eigen::MatrixXd gamma(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            gamma(i, j) = (i == j) ? 0.0 : kernel.variogram(grid[i], grid[j]);
    return covariance_from_variogram(gamma, s2);
}

/// Invert the schedule condition exactly: Sigma_n = 1 1^T - Gamma / c_n.
/// Requires c_n larger than every off-diagonal entry; the result must be
/// positive definite, otherwise the schedule was evaluated too early.
inline Eigen::MatrixXd sigma_from_gamma(const Variogram& gamma, double c_n) {
    if (!(c_n > 0.0)) throw InvalidParameterError("sigma_from_gamma: c_n must be > 0");
    const auto& g = gamma.matrix();
    const auto k = g.rows();
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Ones(k, k) - g / c_n;
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            if (i != j && !(sigma(i, j) > -1.0 && sigma(i, j) < 1.0))
                throw InvalidParameterError(
                    "sigma_from_gamma: entries leave (-1,1); c_n too small for Gamma");
    const double lo = smallest_eigenvalue(sigma);
    if (lo <= 0.0 && lo < -kPsdRelTol)
        throw ScheduleTooEarlyError(
            "sigma_from_gamma: schedule not yet positive definite (min eigenvalue " +
                std::to_string(lo) + ")",
            lo);
    return sigma;
}

/// Recover Gamma from a schedule matrix: Gamma = c_n (1 1^T - Sigma_n).
inline Eigen::MatrixXd gamma_from_sigma(const Eigen::MatrixXd& sigma, double c_n) {
    const auto k = sigma.rows();
    return c_n * (Eigen::MatrixXd::Ones(k, k) - sigma);
}

}  // namespace extremal
