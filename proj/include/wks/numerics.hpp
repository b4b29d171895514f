#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "wks/errors.hpp"

namespace wks::num {

inline constexpr double pi = std::numbers::pi;

// ---------------------------------------------------------------------
// Adaptive Simpson quadrature with Richardson correction.
// ---------------------------------------------------------------------

namespace detail {

template <class F>
double simpson_rec(const F& f, double a, double fa, double b, double fb,
                   double m, double fm, double whole, double tol, int depth)
{
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h6 = (b - a) / 12.0;
    const double left = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
         + simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace detail

template <class F>
double adaptive_simpson(const F& f, double a, double b, double abs_tol,
                        int max_depth = 40)
{
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

// Composite Simpson over equally spaced values; values.size() must be odd.
inline double composite_simpson(const std::vector<double>& values, double h)
{
    const std::size_t m = values.size();
    if (m < 3 || m % 2 == 0) {
        throw InputError("composite_simpson: need an odd number of nodes >= 3");
    }
    double sum = values.front() + values.back();
    for (std::size_t i = 1; i + 1 < m; i += 2) sum += 4.0 * values[i];
    for (std::size_t i = 2; i + 1 < m; i += 2) sum += 2.0 * values[i];
    return sum * h / 3.0;
}

// ---------------------------------------------------------------------
// Golden-section search.
// ---------------------------------------------------------------------

// Argmin of a unimodal f on [a, b] to absolute x-tolerance.
template <class F>
double golden_min(const F& f, double a, double b, double x_tol,
                  int max_iter = 200)
{
    constexpr double inv_phi = 0.6180339887498948482;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

template <class F>
double golden_max(const F& f, double a, double b, double x_tol,
                  int max_iter = 200)
{
    return golden_min([&](double x) { return -f(x); }, a, b, x_tol, max_iter);
}

// ---------------------------------------------------------------------
// Bisection for monotone increasing f: smallest x in [lo, hi] with
// f(x) >= target, assuming f(hi) >= target.
// ---------------------------------------------------------------------

template <class F>
double bisect_increasing(const F& f, double target, double lo, double hi,
                         double x_tol, int max_iter = 200)
{
    for (int i = 0; i < max_iter && (hi - lo) > x_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) >= target) hi = mid; else lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace wks::num
