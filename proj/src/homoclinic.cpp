#include "casim/homoclinic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casim/errors.hpp"
#include "casim/integrator.hpp"

namespace casim {

namespace {

// Node of the forward integration, enough for cubic Hermite resampling.
struct Node {
    double tau, xi, v, a;
};

double find_turning_point(const ReducedSystem& sys, double saddle_xi, double center_xi,
                          double Us) {
    double a = center_xi;
    double b = center_xi + (center_xi - saddle_xi);
    const double hi = sys.xi_max();
    double fb;
    while (true) {
        if (b > hi) b = hi;
        fb = sys.potential(b) - Us;
        if (fb >= 0.0) break;
        if (b >= hi)
            throw ConvergenceError(
                "compute_homoclinic: potential never returns to the saddle level "
                "right of the center (force data truncated or corrupt)");
        b = center_xi + 1.6 * (b - center_xi);
    }
    double fa = sys.potential(a) - Us;
    // bisection to 1e-14 relative
    while (b - a > 1e-14 * std::max(std::abs(a), std::abs(b))) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = sys.potential(m) - Us;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

HomoclinicOrbit compute_homoclinic_reduced(const ReducedSystem& sys, double saddle_xi,
                                           double center_xi, double tol_saddle,
                                           double dt) {
    if (!(tol_saddle > 0.0) || !(dt > 0.0))
        throw InvalidParameter("compute_homoclinic: tol_saddle and dt must be > 0");
    if (!(center_xi > saddle_xi))
        throw InvalidParameter("compute_homoclinic: center must lie right of saddle");

    const double Us = sys.potential(saddle_xi);
    const double Uc = sys.potential(center_xi);
    const double turning = find_turning_point(sys, saddle_xi, center_xi, Us);

    // decay rate at the saddle sets the time-out scale
    const double fd = 1e-5 * std::max(1.0, std::abs(saddle_xi));
    const double upp =
        (sys.potential(saddle_xi + fd) - 2.0 * Us + sys.potential(saddle_xi - fd)) /
        (fd * fd);
    const double lambda = std::sqrt(std::max(-upp, 1e-8));
    const double tau_max = 8.0 * (std::log(1.0 / tol_saddle) + 25.0) / lambda;

    // conservative forward integration from the turning point
    auto rhs = [&sys](double, double xi, double v, double& dxi, double& dv) {
        if (!(xi > sys.xi_min()) || !(xi < sys.xi_max())) return false;
        dxi = v;
        dv = sys.accel(xi);
        return true;
    };
    StepperControls ctl;
    ctl.rtol = 1e-12;
    ctl.atol = 1e-14;
    ctl.h_max = 0.005;  // keeps the Hermite resampling error below the energy budget
    Dopri5<decltype(rhs)> stepper(rhs, ctl);
    stepper.init(0.0, turning, 0.0);

    std::vector<Node> nodes;
    nodes.push_back({0.0, turning, 0.0, sys.accel(turning)});
    double T_end = 0.0;
    while (true) {
        if (!stepper.step()) {
            std::ostringstream ss;
            ss << "compute_homoclinic: step size underflow at tau=" << stepper.tau_prev()
               << " xi=" << stepper.xi_prev() << " v=" << stepper.v_prev();
            throw ConvergenceError(ss.str());
        }
        nodes.push_back({stepper.tau_curr(), stepper.xi_curr(), stepper.v_curr(),
                         stepper.accel_curr()});
        if (stepper.xi_curr() - saddle_xi < tol_saddle) {
            T_end = stepper.tau_curr();
            break;
        }
        if (stepper.tau_curr() > tau_max) {
            std::ostringstream ss;
            ss << "compute_homoclinic: no convergence to the saddle within tau="
               << tau_max << " (xi=" << stepper.xi_curr() << ", saddle=" << saddle_xi
               << ", tol=" << tol_saddle << ")";
            throw ConvergenceError(ss.str());
        }
    }

    // uniform power-of-two grid with dt_grid <= dt
    std::size_t N = 8;
    while (static_cast<double>(N) < 2.0 * T_end / dt) N <<= 1;
    const double dt_grid = 2.0 * T_end / static_cast<double>(N);
    const std::size_t half = N / 2;

    // sample the forward half [0, T_end] by cubic Hermite between nodes
    std::vector<double> xf(half + 1), vf(half + 1);
    std::size_t seg = 0;
    for (std::size_t j = 0; j <= half; ++j) {
        const double tau = std::min(static_cast<double>(j) * dt_grid, T_end);
        while (seg + 2 < nodes.size() && nodes[seg + 1].tau < tau) ++seg;
        const Node& n0 = nodes[seg];
        const Node& n1 = nodes[seg + 1];
        const double h = n1.tau - n0.tau;
        const double s = (tau - n0.tau) / h;
        const double s2 = s * s, s3 = s2 * s;
        const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
        const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
        xf[j] = h00 * n0.xi + h10 * h * n0.v + h01 * n1.xi + h11 * h * n1.v;
        vf[j] = h00 * n0.v + h10 * h * n0.a + h01 * n1.v + h11 * h * n1.a;
    }
    xf[0] = turning;
    vf[0] = 0.0;

    HomoclinicOrbit orbit;
    orbit.t.resize(N);
    orbit.x.resize(N);
    orbit.v.resize(N);
    for (std::size_t g = 0; g < N; ++g) {
        const std::ptrdiff_t j =
            static_cast<std::ptrdiff_t>(g) - static_cast<std::ptrdiff_t>(half);
        orbit.t[g] = static_cast<double>(j) * dt_grid;
        const std::size_t aj = static_cast<std::size_t>(j < 0 ? -j : j);
        orbit.x[g] = xf[aj];
        orbit.v[g] = (j < 0) ? -vf[aj] : vf[aj];
    }
    orbit.v[half] = 0.0;
    orbit.dt_grid = dt_grid;
    orbit.saddle_xi = saddle_xi;
    orbit.center_xi = center_xi;
    orbit.turning_xi = turning;
    orbit.tol_saddle = tol_saddle;
    orbit.energy = Us;

    double msv = 0.0;
    for (std::size_t g = 0; g < N; ++g) {
        const double w = (g == 0 || g == N - 1) ? 0.5 : 1.0;
        msv += w * orbit.v[g] * orbit.v[g];
    }
    orbit.msv = msv * dt_grid;

    // energy must be constant along the returned samples
    const double scale = std::abs(Us - Uc);
    double worst = 0.0;
    for (std::size_t g = half; g < N; ++g) {  // forward half; mirror is exact
        const double E = 0.5 * orbit.v[g] * orbit.v[g] + sys.potential(orbit.x[g]);
        worst = std::max(worst, std::abs(E - Us));
    }
    if (!(worst < 1e-8 * scale)) {
        std::ostringstream ss;
        ss << "compute_homoclinic: energy drift " << worst << " exceeds 1e-8 * "
           << scale << " along the sampled orbit";
        throw ConsistencyError(ss.str());
    }
    return orbit;
}

HomoclinicOrbit compute_homoclinic(const EquilibriumSet& eq,
                                   const OscillatorParams& params,
                                   std::shared_ptr<const ForceModel> force,
                                   double tol_saddle, double dt) {
    if (!eq.saddle_x || !eq.center_x)
        throw InvalidParameter(
            "compute_homoclinic: both equilibria are required (no homoclinic orbit "
            "in the pull-in regime)");
    const CasimirSystem sys(params, std::move(force));
    return compute_homoclinic_reduced(sys, *eq.saddle_x / params.L0,
                                      *eq.center_x / params.L0, tol_saddle, dt);
}

}  // namespace casim
