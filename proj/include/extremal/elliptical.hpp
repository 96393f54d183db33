// elliptical.hpp — sampling of elliptical vectors X = R_k A U with
// Sigma = A A^T a correlation matrix.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

#include "distributions.hpp"
#include "errors.hpp"
#include "radial.hpp"
#include "rng.hpp"
#include "variogram.hpp"

namespace extremal {

struct EllipticalSpec {
    std::size_t k = 0;
    Eigen::MatrixXd sigma;  // k x k correlation matrix, unit diagonal
    RadialLaw radial;

    void validate() const {
        if (k < 1) throw InvalidDimensionError("EllipticalSpec: k must be >= 1");
        if (sigma.rows() != static_cast<Eigen::Index>(k) ||
            sigma.cols() != static_cast<Eigen::Index>(k))
            throw InvalidParameterError("EllipticalSpec: sigma must be k x k");
        for (Eigen::Index i = 0; i < sigma.rows(); ++i) {
            if (std::abs(sigma(i, i) - 1.0) > 1e-12)
                throw InvalidParameterError("EllipticalSpec: sigma must have unit diagonal");
            for (Eigen::Index j = i + 1; j < sigma.cols(); ++j)
                if (sigma(i, j) != sigma(j, i))
                    throw InvalidParameterError("EllipticalSpec: sigma must be symmetric");
        }
    }
};

/// Draws X = R A U.  When R^2 ~ chi^2_k the product R U is a standard
/// Gaussian vector, so X = A g exactly in law; that path skips the
/// normalization and radial draw.
class EllipticalSampler {
  public:
    explicit EllipticalSampler(const EllipticalSpec& spec)
        : EllipticalSampler(spec.sigma, spec.radial, /*correlation=*/true) {
        spec.validate();
    }

    /// Sampler for a general PSD scale matrix A A^T = scale_sq (diagonal not
    /// necessarily 1), as used by the limit-law representations.
    static EllipticalSampler from_scale_matrix(const Eigen::MatrixXd& scale_sq,
                                               const RadialLaw& radial) {
        return EllipticalSampler(scale_sq, radial, /*correlation=*/false);
    }

    std::size_t dim() const { return k_; }
    double jitter() const { return jitter_; }
    bool gaussian_exact() const { return gaussian_exact_; }

    /// One draw into out[0..k); out may alias nothing else.
    void draw(RngStream& rng, double* out) {
        fill_normal(rng, {scratch_.data(), k_});
        if (!gaussian_exact_) {
            const double r = radial_.sample(rng);
            if (k_ == 1) {
                scratch_[0] = scratch_[0] >= 0.0 ? r : -r;
            } else {
                double norm2 = 0.0;
                for (double g : scratch_) norm2 += g * g;
                const double f = r / std::sqrt(norm2);
                for (double& g : scratch_) g *= f;
            }
        }
        // Lower-triangular matvec.
        std::size_t at = 0;
        for (std::size_t i = 0; i < k_; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j <= i; ++j) acc += a_[at++] * scratch_[j];
            out[i] = acc;
        }
    }

  private:
    EllipticalSampler(const Eigen::MatrixXd& scale_sq, const RadialLaw& radial,
                      bool correlation)
        : k_(static_cast<std::size_t>(scale_sq.rows())), radial_(radial) {
        // Correlation matrices must be strictly positive definite (rank
        // deficiency means a degenerate elliptical law); general scale
        // matrices may be merely PSD.
        if (correlation && smallest_eigenvalue(scale_sq) <= 1e-12)
            throw NotPositiveDefiniteError(
                "sample_elliptical: correlation matrix is singular");
        const CholeskyResult chol = cholesky_psd(scale_sq, "sample_elliptical");
        jitter_ = chol.jitter;
        // Pack the lower triangle row-major for the tight per-draw loop.
        a_.resize(k_ * (k_ + 1) / 2);
        std::size_t at = 0;
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j <= i; ++j) a_[at++] = chol.lower(i, j);
        gaussian_exact_ = radial_.is_chi && radial_.chi_dof == static_cast<double>(k_);
        scratch_.resize(k_);
    }

    std::size_t k_;
    RadialLaw radial_;
    std::vector<double> a_;
    std::vector<double> scratch_;
    double jitter_ = 0.0;
    bool gaussian_exact_ = false;
};

/// n independent draws, row-major n x k.
inline std::vector<double> sample_elliptical(const EllipticalSpec& spec, std::size_t n,
                                             RngStream& rng) {
    EllipticalSampler sampler(spec);
    std::vector<double> out(n * spec.k);
    for (std::size_t i = 0; i < n; ++i) sampler.draw(rng, out.data() + i * spec.k);
    return out;
}

}  // namespace extremal
