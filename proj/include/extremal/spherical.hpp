// spherical.hpp — Gaussian paths on a grid and the spherical model
// X(t) = S Y(t) (scalar S) or X(t) = S(t) Y(t) (path S).
#pragma once

#include <Eigen/Dense>

#include <functional>
#include <span>
#include <vector>

#include "distributions.hpp"
#include "errors.hpp"
#include "rng.hpp"
#include "scale_law.hpp"
#include "variogram.hpp"

namespace extremal {

/// Mean-zero Gaussian vector on a fixed grid, Cholesky factorization done
/// once at construction and shared across draws.
class GaussianPathSampler {
  public:
    GaussianPathSampler(const GaussianKernel& kernel, std::span<const double> grid)
        : k_(grid.size()) {
        const Eigen::MatrixXd cov = variogram_to_covariance(kernel, grid);
        init(cov);
    }

    explicit GaussianPathSampler(const Eigen::MatrixXd& covariance)
        : k_(static_cast<std::size_t>(covariance.rows())) {
        init(covariance);
    }

    std::size_t dim() const { return k_; }
    double jitter() const { return jitter_; }

    void draw(RngStream& rng, double* out) {
        fill_normal(rng, {scratch_.data(), k_});
        std::size_t at = 0;
        for (std::size_t i = 0; i < k_; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j <= i; ++j) acc += a_[at++] * scratch_[j];
            out[i] = acc;
        }
    }

    std::vector<double> draw(RngStream& rng) {
        std::vector<double> out(k_);
        draw(rng, out.data());
        return out;
    }

  private:
    void init(const Eigen::MatrixXd& cov) {
        const CholeskyResult chol = cholesky_psd(cov, "gaussian_path");
        jitter_ = chol.jitter;
        a_.resize(k_ * (k_ + 1) / 2);
        std::size_t at = 0;
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                a_[at++] = chol.lower(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(j));
        scratch_.resize(k_);
    }

    std::size_t k_;
    std::vector<double> a_;
    std::vector<double> scratch_;
    double jitter_ = 0.0;
};

enum class ScaleMode { ScalarS, PathS };

/// Sampler for scale paths S(t_1..t_k); must return values > 0.
using ScalePathSampler =
    std::function<std::vector<double>(std::span<const double> grid, RngStream&)>;

/// Wrap a scalar law as a constant-in-t path (independent across atoms).
inline ScalePathSampler scalar_scale_path(const ScaleLaw& law) {
    return [law](std::span<const double> grid, RngStream& rng) {
        return std::vector<double>(grid.size(), law.sample(rng));
    };
}

/// Wrap a scalar law as an i.i.d.-across-grid path.  A stand-in when no
/// dependence model for S(.) is given; any user-supplied sampler can replace
/// it.
inline ScalePathSampler iid_scale_path(const ScaleLaw& law) {
    return [law](std::span<const double> grid, RngStream& rng) {
        std::vector<double> s(grid.size());
        for (auto& v : s) v = law.sample(rng);
        return s;
    };
}

/// One spherical-process path on the grid: X(t_j) = S Y(t_j) (scalar mode) or
/// S(t_j) Y(t_j) (path mode); S independent of the Gaussian Y.
class SphericalProcessSampler {
  public:
    SphericalProcessSampler(const GaussianKernel& kernel, std::span<const double> grid,
                            ScaleLaw scale, ScaleMode mode,
                            ScalePathSampler path_sampler = {})
        : gauss_(kernel, grid),
          grid_(grid.begin(), grid.end()),
          scale_(std::move(scale)),
          mode_(mode),
          path_sampler_(std::move(path_sampler)) {
        if (mode_ == ScaleMode::PathS && !path_sampler_)
            throw InvalidParameterError(
                "spherical process: path-S mode needs a scale path sampler");
    }

    std::size_t dim() const { return gauss_.dim(); }

    std::vector<double> draw(RngStream& rng) {
        std::vector<double> x = gauss_.draw(rng);
        if (mode_ == ScaleMode::ScalarS) {
            const double s = scale_.sample(rng);
            for (double& v : x) v *= s;
        } else {
            const std::vector<double> s = path_sampler_(grid_, rng);
            for (std::size_t j = 0; j < x.size(); ++j) x[j] *= s[j];
        }
        return x;
    }

  private:
    GaussianPathSampler gauss_;
    std::vector<double> grid_;
    ScaleLaw scale_;
    ScaleMode mode_;
    ScalePathSampler path_sampler_;
};

/// n paths, row-major n x k.
inline std::vector<double> sample_spherical_process(const GaussianKernel& kernel,
                                                    const ScaleLaw& scale,
                                                    std::span<const double> grid,
                                                    ScaleMode mode, std::size_t n,
                                                    RngStream& rng,
                                                    ScalePathSampler path_sampler = {}) {
    SphericalProcessSampler sampler(kernel, grid, scale, mode, std::move(path_sampler));
    std::vector<double> out(n * grid.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double> x = sampler.draw(rng);
        std::copy(x.begin(), x.end(), out.begin() + static_cast<std::ptrdiff_t>(i * grid.size()));
    }
    return out;
}

}  // namespace extremal
