// rootfind.hpp — bracketed root finding for quantile inversion.
//
// Bracketing bisection followed by a secant polish: works for table-backed
// CDFs where derivatives are unavailable.
#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "errors.hpp"

namespace extremal {

/// Root of f on [lo, hi] (f(lo), f(hi) of opposite sign) to relative
/// tolerance rel_tol on the abscissa.
template <typename F>
double find_root(F&& f, double lo, double hi, double rel_tol = 1e-10) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoSolutionError("find_root: bracket does not straddle a sign change");
    // Bisection until the bracket is tight.
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        const double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
        if (hi - lo <= rel_tol * scale) break;
    }
    // Secant polish inside the bracket.
    double a = lo, fa = flo, b = hi, fb = fhi;
    double best = 0.5 * (lo + hi);
    double fbest = f(best);
    for (int iter = 0; iter < 8; ++iter) {
        if (fb == fa) break;
        const double c = b - fb * (b - a) / (fb - fa);
        if (!(c >= lo && c <= hi)) break;
        const double fc = f(c);
        a = b;
        fa = fb;
        b = c;
        fb = fc;
        if (std::abs(fc) < std::abs(fbest)) {
            best = c;
            fbest = fc;
        }
        if (fc == 0.0) break;
    }
    return best;
}

/// Invert a nondecreasing function: smallest x with g(x) >= target, searched
/// from an initial guess by doubling bracket expansion.
template <typename G>
double invert_increasing(G&& g, double target, double guess_lo, double guess_hi,
                         double rel_tol = 1e-10, double domain_lo = -std::numeric_limits<double>::infinity(),
                         double domain_hi = std::numeric_limits<double>::infinity()) {
    double lo = guess_lo, hi = guess_hi;
    if (!(hi > lo)) hi = lo + 1.0;
    int guard = 0;
    while (g(hi) < target) {
        const double width = hi - lo;
        lo = hi;
        hi = hi + 2.0 * width;
        if (hi > domain_hi) {
            hi = domain_hi;
            if (g(hi) < target) throw NoSolutionError("invert_increasing: target above range");
            break;
        }
        if (++guard > 200) throw NoSolutionError("invert_increasing: bracket expansion failed");
    }
    guard = 0;
    while (g(lo) > target) {
        const double width = hi - lo;
        hi = lo;
        lo = lo - 2.0 * width;
        if (lo < domain_lo) {
            lo = domain_lo;
            if (g(lo) > target) throw NoSolutionError("invert_increasing: target below range");
            break;
        }
        if (++guard > 200) throw NoSolutionError("invert_increasing: bracket expansion failed");
    }
    return find_root([&](double x) { return g(x) - target; }, lo, hi, rel_tol);
}

}  // namespace extremal
