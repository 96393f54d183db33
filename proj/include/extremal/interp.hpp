// interp.hpp — monotone cubic Hermite interpolation (Fritsch-Carlson).
//
// Used for CDF/quantile lookup tables: the interpolant preserves
// monotonicity of the knot values, so interpolated CDFs stay CDFs.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace extremal {

class MonotoneCubic {
  public:
    MonotoneCubic() = default;

    /// Knots x strictly increasing, y nondecreasing.
    MonotoneCubic(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw InvalidParameterError("MonotoneCubic: need >= 2 matching knots");
        for (std::size_t i = 1; i < n; ++i) {
            if (!(x_[i] > x_[i - 1]))
                throw InvalidParameterError("MonotoneCubic: x not strictly increasing");
            if (y_[i] < y_[i - 1])
                throw InvalidParameterError("MonotoneCubic: y not nondecreasing");
        }
        slope_.resize(n);
        std::vector<double> d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        slope_[0] = d[0];
        slope_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i)
            slope_[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
        // Fritsch-Carlson limiter keeps each segment monotone.
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) {
                slope_[i] = 0.0;
                slope_[i + 1] = 0.0;
                continue;
            }
            const double alpha = slope_[i] / d[i];
            const double beta = slope_[i + 1] / d[i];
            const double s = alpha * alpha + beta * beta;
            if (s > 9.0) {
                const double tau = 3.0 / std::sqrt(s);
                slope_[i] = tau * alpha * d[i];
                slope_[i + 1] = tau * beta * d[i];
            }
        }
    }

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    double y_min() const { return y_.front(); }
    double y_max() const { return y_.back(); }

    /// Evaluate; clamps outside the knot range.
    double operator()(double x) const {
        if (x <= x_.front()) return y_.front();
        if (x >= x_.back()) return y_.back();
        const std::size_t i = segment(x);
        const double h = x_[i + 1] - x_[i];
        const double t = (x - x_[i]) / h;
        const double t2 = t * t;
        const double t3 = t2 * t;
        const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        const double h10 = t3 - 2.0 * t2 + t;
        const double h01 = -2.0 * t3 + 3.0 * t2;
        const double h11 = t3 - t2;
        return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
    }

    /// Inverse of the interpolant (requires y strictly increasing across the
    /// table globally); bisection on the evaluated curve.
    double inverse(double y) const {
        if (y <= y_.front()) return x_.front();
        if (y >= y_.back()) return x_.back();
        const auto it = std::upper_bound(y_.begin(), y_.end(), y);
        std::size_t i = static_cast<std::size_t>(it - y_.begin());
        i = (i == 0) ? 0 : i - 1;
        double lo = x_[i];
        double hi = x_[std::min(i + 1, x_.size() - 1)];
        while (hi - lo > 1e-14 * std::max(1.0, std::abs(hi))) {
            const double mid = 0.5 * (lo + hi);
            if ((*this)(mid) < y)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

  private:
    std::size_t segment(double x) const {
        const auto it = std::upper_bound(x_.begin(), x_.end(), x);
        return static_cast<std::size_t>(it - x_.begin()) - 1;
    }

    std::vector<double> x_, y_, slope_;
};

}  // namespace extremal
