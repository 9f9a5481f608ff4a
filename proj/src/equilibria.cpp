#include "casim/equilibria.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "casim/errors.hpp"

namespace casim {

namespace {

struct Root {
    double xi;
    bool rising;  // accel goes - to + through the root => saddle
};

// Bisection until the bracket collapses to adjacent floats; returns the
// endpoint with the smaller |accel|.
double bisect_to_machine(const ReducedSystem& sys, double a, double b, double fa,
                         double fb) {
    while (true) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = sys.accel(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

}  // namespace

ReducedEquilibria find_equilibria_reduced(const ReducedSystem& sys, double lo,
                                          double hi, int scan_points) {
    if (!(hi > lo)) throw InvalidParameter("find_equilibria: empty scan interval");
    if (scan_points < 8) throw InvalidParameter("find_equilibria: scan_points < 8");

    const double dx = (hi - lo) / scan_points;
    std::vector<Root> roots;
    double x_prev = lo + dx;
    double f_prev = sys.accel(x_prev);
    if (f_prev == 0.0) {
        // grid node exactly on a root; classify from the next node
        const double fn = sys.accel(x_prev + dx);
        roots.push_back({x_prev, fn > 0.0});
    }
    for (int i = 2; i <= scan_points; ++i) {
        const double x = (i == scan_points) ? hi : lo + i * dx;
        const double f = sys.accel(x);
        if (f == 0.0) {
            roots.push_back({x, f_prev < 0.0});
        } else if ((f_prev < 0.0) != (f < 0.0) && f_prev != 0.0) {
            const double r = bisect_to_machine(sys, x_prev, x, f_prev, f);
            roots.push_back({r, f > 0.0});
        }
        x_prev = x;
        f_prev = f;
    }

    if (roots.size() > 2)
        throw MultiRootError("find_equilibria: " + std::to_string(roots.size()) +
                             " force-balance roots found; force table is unphysical");

    ReducedEquilibria out;
    for (const Root& r : roots) {
        if (r.rising)
            out.saddle_xi = r.xi;
        else
            out.center_xi = r.xi;
    }
    if (roots.size() == 2 && (!out.saddle_xi || !out.center_xi))
        throw MultiRootError("find_equilibria: two roots with identical type; "
                             "force table is unphysical");
    return out;
}

EquilibriumSet find_equilibria(const OscillatorParams& params, const ForceModel& force,
                               int scan_points) {
    // a cheap holder so the reduced scan can reuse CasimirSystem
    auto fm = std::shared_ptr<const ForceModel>(&force, [](const ForceModel*) {});
    const CasimirSystem sys(params, fm);
    const double lo = std::max(params.d0, force.x_min()) / params.L0;
    const ReducedEquilibria red = find_equilibria_reduced(sys, lo, 1.0, scan_points);

    EquilibriumSet out;
    if (red.saddle_xi) out.saddle_x = *red.saddle_xi * params.L0;
    if (red.center_xi) out.center_x = *red.center_xi * params.L0;
    if (out.saddle_x) {
        const double xs = *out.saddle_x;
        const double d = xs - params.L0;
        out.potential_at_saddle =
            0.5 * params.kappa * d * d + force.potential_primitive(xs);
    }
    return out;
}

}  // namespace casim
