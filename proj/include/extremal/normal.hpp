// normal.hpp — standard normal CDF/quantile wrappers (Boost.Math backed).
#pragma once

#include <boost/math/distributions/normal.hpp>

namespace extremal {

inline const boost::math::normal_distribution<double>& std_normal() {
    static const boost::math::normal_distribution<double> dist(0.0, 1.0);
    return dist;
}

inline double norm_cdf(double x) { return boost::math::cdf(std_normal(), x); }
inline double norm_sf(double x) { return boost::math::cdf(boost::math::complement(std_normal(), x)); }
inline double norm_pdf(double x) { return boost::math::pdf(std_normal(), x); }
inline double norm_quantile(double p) { return boost::math::quantile(std_normal(), p); }
inline double norm_sf_inv(double q) {
    return boost::math::quantile(boost::math::complement(std_normal(), q));
}

}  // namespace extremal
