#pragma once

#include <cmath>
#include <utility>

namespace evohealth::numeric {

// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs. Halves until the
// midpoint coincides with an endpoint or max_iter is hit, then returns whichever of
// the final endpoints has the smaller |f|.
template <typename F>
double bisect(F&& f, double lo, double hi, int max_iter = 400) {
    double f_lo = f(lo);
    double f_hi = f(hi);
    for (int i = 0; i < max_iter; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
}

// Golden-section search for the maximizer of a unimodal f on [lo, hi].
template <typename F>
double golden_section_max(F&& f, double lo, double hi, double x_tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > x_tol) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
        if (!(c < d)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace evohealth::numeric
