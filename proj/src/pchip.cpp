#include "casim/pchip.hpp"

#include <algorithm>
#include <cmath>

#include "casim/errors.hpp"

namespace casim {

namespace {

// One-sided three-point slope estimate with the usual monotonicity clamp.
double edge_slope(double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return m;
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> t, std::vector<double> y)
    : t_(std::move(t)), y_(std::move(y)) {
    const std::size_t n = t_.size();
    if (n < 2 || y_.size() != n)
        throw ContractError("MonotoneCubic: need >= 2 knots and matching sizes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(t_[i] > t_[i - 1]))
            throw ContractError("MonotoneCubic: knots must be strictly increasing");

    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = t_[i + 1] - t_[i];
        d[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    m_.assign(n, 0.0);
    if (n == 2) {
        m_[0] = m_[1] = d[0];
    } else {
        m_[0] = edge_slope(h[0], h[1], d[0], d[1]);
        m_[n - 1] = edge_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] == 0.0 || d[i] == 0.0 || (d[i - 1] > 0.0) != (d[i] > 0.0)) {
                m_[i] = 0.0;
            } else {
                // Weighted harmonic mean of adjacent secant slopes.
                const double w1 = 2.0 * h[i] + h[i - 1];
                const double w2 = h[i] + 2.0 * h[i - 1];
                m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
    }
}

std::size_t MonotoneCubic::locate(double u) const {
    auto it = std::upper_bound(t_.begin(), t_.end(), u);
    std::size_t i = static_cast<std::size_t>(it - t_.begin());
    if (i == 0) return 0;
    if (i >= t_.size()) return t_.size() - 2;
    return i - 1;
}

double MonotoneCubic::operator()(double u) const {
    if (!(u >= t_.front()) || !(u <= t_.back()))
        throw DomainError("MonotoneCubic: evaluation outside knot range");
    const std::size_t i = locate(u);
    const double h = t_[i + 1] - t_[i];
    const double s = (u - t_[i]) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

}  // namespace casim
