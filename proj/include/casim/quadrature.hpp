#pragma once

#include <cmath>

#include "casim/errors.hpp"

namespace casim {

namespace detail {

template <class F>
double simpson_rec(const F& f, double a, double fa, double b, double fb,
                   double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0)
        throw ConvergenceError("adaptive quadrature: recursion limit reached");
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b]. The error scale is seeded
/// from a 16-panel composite pass so integrands with interior zeros (odd
/// velocity profiles, for instance) do not collapse the tolerance.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double rel_tol = 1e-12,
                          double abs_tol = 0.0) {
    if (a == b) return 0.0;
    constexpr int kPanels = 16;
    const double w = (b - a) / kPanels;

    double fs[2 * kPanels + 1];
    for (int i = 0; i <= 2 * kPanels; ++i) fs[i] = f(a + 0.5 * w * i);

    double coarse = 0.0, l1 = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        const double panel =
            w / 6.0 * (fs[2 * i] + 4.0 * fs[2 * i + 1] + fs[2 * i + 2]);
        coarse += panel;
        l1 += std::abs(panel);
    }
    double tol = std::max(abs_tol, rel_tol * std::max(std::abs(coarse), l1));
    if (tol == 0.0) tol = 1e-300;

    double total = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        const double pa = a + i * w, pb = pa + w, pm = pa + 0.5 * w;
        const double panel =
            w / 6.0 * (fs[2 * i] + 4.0 * fs[2 * i + 1] + fs[2 * i + 2]);
        total += detail::simpson_rec(f, pa, fs[2 * i], pb, fs[2 * i + 2], pm,
                                     fs[2 * i + 1], panel, tol / kPanels, 56);
    }
    return total;
}

}  // namespace casim
