#pragma once

#include <algorithm>
#include <cmath>

#include "casim/errors.hpp"

namespace casim {

struct StepperControls {
    double rtol = 1e-8;
    double atol = 1e-12;
    double h_min = 1e-14;
    double h_max = 1.0;
    double safety = 0.6;  // keeps conservative energy drift below 1e-6 per 100 periods
    double h_init = 0.0;  // 0 = choose automatically
};

/// Dormand-Prince 5(4) embedded pair for the planar system (xi, v), with
/// FSAL and cubic Hermite dense output on the last accepted step.
///
/// RHS signature: bool rhs(double tau, double xi, double v, double& dxi,
/// double& dv). Returning false marks the state as not evaluable (domain
/// edge); the step is then retried with a smaller h.
template <class RHS>
class Dopri5 {
  public:
    Dopri5(RHS rhs, StepperControls c) : f_(std::move(rhs)), c_(c) {}

    /// Sets the initial state; the initial point must be evaluable.
    void init(double tau, double xi, double v) {
        t0_ = t1_ = tau;
        xi0_ = xi1_ = xi;
        v0_ = v1_ = v;
        if (!f_(tau, xi, v, k1x_, k1v_) || !finite2(k1x_, k1v_))
            throw DomainError("Dopri5::init: initial state not evaluable");
        a0_ = a1_ = k1v_;
        h_ = c_.h_init > 0.0 ? std::min(c_.h_init, c_.h_max) : estimate_h0();
    }

    /// Advances one accepted step. Returns false when the step size
    /// underflows below h_min (stiff failure); the last accepted state is
    /// then (tau_prev, xi_prev, v_prev).
    bool step() {
        // shift: the end of the last step becomes the new start
        t0_ = t1_;
        xi0_ = xi1_;
        v0_ = v1_;
        a0_ = a1_;
        while (true) {
            if (!(h_ >= c_.h_min)) return false;
            Trial tr;
            if (evaluate_trial(h_, tr)) {
                if (tr.err <= 1.0) {
                    t1_ = t0_ + h_;
                    xi1_ = tr.x;
                    v1_ = tr.v;
                    a1_ = tr.k7v;
                    build_dense(h_, tr);
                    k1x_ = tr.k7x;  // FSAL
                    k1v_ = tr.k7v;
                    hlast_ = h_;
                    const double fac = std::clamp(
                        c_.safety * std::pow(std::max(tr.err, 1e-30), -0.2), 0.2, 5.0);
                    h_ = std::min(h_ * fac, c_.h_max);
                    return true;
                }
                h_ *= std::clamp(c_.safety * std::pow(tr.err, -0.2), 0.2, 0.9);
            } else {
                // stage not evaluable or non-finite: shrink hard
                h_ *= 0.25;
            }
        }
    }

    double tau_prev() const { return t0_; }
    double tau_curr() const { return t1_; }
    double xi_prev() const { return xi0_; }
    double xi_curr() const { return xi1_; }
    double v_prev() const { return v0_; }
    double v_curr() const { return v1_; }
    double accel_prev() const { return a0_; }
    double accel_curr() const { return a1_; }
    double h_next() const { return h_; }
    double h_last() const { return hlast_; }

    /// Caps the next attempted step (e.g. to land exactly on an end time).
    void limit_step(double h) { h_ = std::max(std::min(h_, h), c_.h_min); }

    /// Fourth-order continuous extension on [tau_prev, tau_curr] (the
    /// standard Dormand-Prince dense output).
    void interpolate(double tau, double& xi, double& v) const {
        const double h = t1_ - t0_;
        if (h == 0.0) {
            xi = xi1_;
            v = v1_;
            return;
        }
        const double s = (tau - t0_) / h;
        const double s1 = 1.0 - s;
        xi = rc1_[0] + s * (rc2_[0] + s1 * (rc3_[0] + s * (rc4_[0] + s1 * rc5_[0])));
        v = rc1_[1] + s * (rc2_[1] + s1 * (rc3_[1] + s * (rc4_[1] + s1 * rc5_[1])));
    }

  private:
    struct Trial {
        double x, v, k7x, k7v, err;
        double k3x, k3v, k4x, k4v, k5x, k5v, k6x, k6v;
    };

    void build_dense(double h, const Trial& tr) {
        const double dyx = tr.x - xi0_, dyv = tr.v - v0_;
        const double bsplx = h * k1x_ - dyx, bsplv = h * k1v_ - dyv;
        rc1_[0] = xi0_;
        rc1_[1] = v0_;
        rc2_[0] = dyx;
        rc2_[1] = dyv;
        rc3_[0] = bsplx;
        rc3_[1] = bsplv;
        rc4_[0] = dyx - h * tr.k7x - bsplx;
        rc4_[1] = dyv - h * tr.k7v - bsplv;
        rc5_[0] = h * (d1 * k1x_ + d3 * tr.k3x + d4 * tr.k4x + d5 * tr.k5x +
                       d6 * tr.k6x + d7 * tr.k7x);
        rc5_[1] = h * (d1 * k1v_ + d3 * tr.k3v + d4 * tr.k4v + d5 * tr.k5v +
                       d6 * tr.k6v + d7 * tr.k7v);
    }

    static bool finite2(double a, double b) {
        return std::isfinite(a) && std::isfinite(b);
    }

    // One trial step of size h from (t0_, xi0_, v0_) with k1 = (k1x_, k1v_).
    bool evaluate_trial(double h, Trial& tr) {
        double k2x, k2v, k3x, k3v, k4x, k4v, k5x, k5v, k6x, k6v;
        double x, v;

        x = xi0_ + h * (a21 * k1x_);
        v = v0_ + h * (a21 * k1v_);
        if (!f_(t0_ + c2 * h, x, v, k2x, k2v) || !finite2(k2x, k2v)) return false;

        x = xi0_ + h * (a31 * k1x_ + a32 * k2x);
        v = v0_ + h * (a31 * k1v_ + a32 * k2v);
        if (!f_(t0_ + c3 * h, x, v, k3x, k3v) || !finite2(k3x, k3v)) return false;

        x = xi0_ + h * (a41 * k1x_ + a42 * k2x + a43 * k3x);
        v = v0_ + h * (a41 * k1v_ + a42 * k2v + a43 * k3v);
        if (!f_(t0_ + c4 * h, x, v, k4x, k4v) || !finite2(k4x, k4v)) return false;

        x = xi0_ + h * (a51 * k1x_ + a52 * k2x + a53 * k3x + a54 * k4x);
        v = v0_ + h * (a51 * k1v_ + a52 * k2v + a53 * k3v + a54 * k4v);
        if (!f_(t0_ + c5 * h, x, v, k5x, k5v) || !finite2(k5x, k5v)) return false;

        x = xi0_ + h * (a61 * k1x_ + a62 * k2x + a63 * k3x + a64 * k4x + a65 * k5x);
        v = v0_ + h * (a61 * k1v_ + a62 * k2v + a63 * k3v + a64 * k4v + a65 * k5v);
        if (!f_(t0_ + h, x, v, k6x, k6v) || !finite2(k6x, k6v)) return false;

        tr.x = xi0_ + h * (b1 * k1x_ + b3 * k3x + b4 * k4x + b5 * k5x + b6 * k6x);
        tr.v = v0_ + h * (b1 * k1v_ + b3 * k3v + b4 * k4v + b5 * k5v + b6 * k6v);
        if (!finite2(tr.x, tr.v)) return false;
        if (!f_(t0_ + h, tr.x, tr.v, tr.k7x, tr.k7v) || !finite2(tr.k7x, tr.k7v))
            return false;
        tr.k3x = k3x;
        tr.k3v = k3v;
        tr.k4x = k4x;
        tr.k4v = k4v;
        tr.k5x = k5x;
        tr.k5v = k5v;
        tr.k6x = k6x;
        tr.k6v = k6v;

        const double ex =
            h * (e1 * k1x_ + e3 * k3x + e4 * k4x + e5 * k5x + e6 * k6x + e7 * tr.k7x);
        const double ev =
            h * (e1 * k1v_ + e3 * k3v + e4 * k4v + e5 * k5v + e6 * k6v + e7 * tr.k7v);
        if (!finite2(ex, ev)) return false;

        const double scx = c_.atol + c_.rtol * std::max(std::abs(xi0_), std::abs(tr.x));
        const double scv = c_.atol + c_.rtol * std::max(std::abs(v0_), std::abs(tr.v));
        const double rx = ex / scx, rv = ev / scv;
        tr.err = std::sqrt(0.5 * (rx * rx + rv * rv));
        return std::isfinite(tr.err);
    }

    double estimate_h0() {
        const double scx = c_.atol + c_.rtol * std::abs(xi0_);
        const double scv = c_.atol + c_.rtol * std::abs(v0_);
        const double rx0 = xi0_ / scx, rv0 = v0_ / scv;
        const double rx1 = k1x_ / scx, rv1 = k1v_ / scv;
        const double d0 = std::sqrt(0.5 * (rx0 * rx0 + rv0 * rv0));
        const double d1 = std::sqrt(0.5 * (rx1 * rx1 + rv1 * rv1));
        double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
        h0 = std::min(h0, c_.h_max);
        double fx, fv;
        if (f_(t0_ + h0, xi0_ + h0 * k1x_, v0_ + h0 * k1v_, fx, fv) && finite2(fx, fv)) {
            const double dx = (fx - k1x_) / scx, dv = (fv - k1v_) / scv;
            const double d2 = std::sqrt(0.5 * (dx * dx + dv * dv)) / h0;
            const double dm = std::max(d1, d2);
            const double h1 =
                dm > 1e-15 ? std::pow(0.01 / dm, 0.2) : std::max(1e-6, h0 * 1e-3);
            h0 = std::min({100.0 * h0, h1, c_.h_max});
        } else {
            h0 = std::max(c_.h_min, 1e-3 * h0);
        }
        return std::max(h0, c_.h_min);
    }

    // Dormand-Prince coefficients
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // 5th-order weights minus the embedded 4th-order weights
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    // dense-output weights
    static constexpr double d1 = -12715105075.0 / 11282082432.0,
                            d3 = 87487479700.0 / 32700410799.0,
                            d4 = -10690763975.0 / 1880347072.0,
                            d5 = 701980252875.0 / 199316789632.0,
                            d6 = -1453857185.0 / 822651844.0,
                            d7 = 69997945.0 / 29380423.0;

    RHS f_;
    StepperControls c_;
    double t0_ = 0, t1_ = 0, xi0_ = 0, xi1_ = 0, v0_ = 0, v1_ = 0;
    double a0_ = 0, a1_ = 0;    // dv/dtau at step ends
    double k1x_ = 0, k1v_ = 0;  // FSAL first stage at the current start point
    double rc1_[2] = {0, 0}, rc2_[2] = {0, 0}, rc3_[2] = {0, 0}, rc4_[2] = {0, 0},
           rc5_[2] = {0, 0};
    double h_ = 1e-6, hlast_ = 0.0;
};

}  // namespace casim
