#pragma once

#include <cstddef>
#include <vector>

namespace casim {

/// Monotone shape-preserving piecewise cubic (Fritsch-Carlson slopes).
/// Exact at the knots; produces no overshoot between knots of monotone data.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    /// Knots must be strictly increasing in t. Throws ContractError otherwise.
    MonotoneCubic(std::vector<double> t, std::vector<double> y);

    /// Evaluates at u in [t.front(), t.back()]. Throws DomainError outside.
    double operator()(double u) const;

    double t_min() const { return t_.front(); }
    double t_max() const { return t_.back(); }
    std::size_t size() const { return t_.size(); }

  private:
    std::size_t locate(double u) const;
    std::vector<double> t_, y_, m_;  // knots, values, endpoint slopes
};

}  // namespace casim
