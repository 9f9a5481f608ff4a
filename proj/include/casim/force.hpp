#pragma once

#include <memory>
#include <string>
#include <vector>

#include "casim/pchip.hpp"

namespace casim {

/// Attractive surface-force law F(x) with its potential primitive W(x),
/// W'(x) = F(x). Implementations are immutable after construction and safe
/// for concurrent read-only use.
class ForceModel {
  public:
    virtual ~ForceModel() = default;

    /// Force in N at separation x [m]; > 0 and strictly decreasing on the
    /// valid range. Throws DomainError outside [x_min, x_max].
    virtual double force(double x) const = 0;

    /// Antiderivative of force in J (anchor is model-specific).
    virtual double potential_primitive(double x) const = 0;

    virtual double x_min() const = 0;  ///< lower edge of valid range, m
    virtual double x_max() const = 0;  ///< upper edge, m (may be +inf)
    virtual double contact_distance() const = 0;  ///< d0, m
    virtual std::string id() const = 0;           ///< for output metadata
};

/// pi^2 hbar c A / (240 x^4), the zero-temperature parallel-plate law for
/// perfect reflectors. Serves as the reproducible reference model; measured
/// force curves enter through TabulatedForceModel instead.
class IdealCasimirModel final : public ForceModel {
  public:
    explicit IdealCasimirModel(double area);

    double force(double x) const override;
    double potential_primitive(double x) const override;  // -C/(3 x^3)
    double x_min() const override { return 0.0; }
    double x_max() const override;
    double contact_distance() const override { return 0.0; }
    std::string id() const override { return "ideal"; }

    double area() const { return area_; }
    double constant() const { return C_; }  // N m^4

  private:
    double area_, C_;
};

/// Force curve interpolated from (x, F) samples, monotone shape-preserving
/// cubic in (log x, log F). Never extrapolates.
class TabulatedForceModel final : public ForceModel {
  public:
    /// Samples must be strictly increasing in x, strictly positive and
    /// strictly decreasing in F, with all x > d0 and at least 4 rows.
    TabulatedForceModel(std::vector<double> x, std::vector<double> F, double d0,
                        std::string source = "table");

    double force(double x) const override;
    /// Computed by adaptive quadrature of the interpolant, anchored so that
    /// W(x_max) = 0.
    double potential_primitive(double x) const override;
    double x_min() const override { return x_.front(); }
    double x_max() const override { return x_.back(); }
    double contact_distance() const override { return d0_; }
    std::string id() const override { return source_; }

    const std::vector<double>& knots_x() const { return x_; }
    const std::vector<double>& knots_F() const { return F_; }

  private:
    void validate_rows() const;
    double force_unchecked(double x) const;

    std::vector<double> x_, F_;
    double d0_;
    std::string source_;
    MonotoneCubic loglog_;
    std::vector<double> W_knots_;  // potential at knots, W(x_back) = 0
};

/// Reads a two-column CSV `x_m,F_N` (header row required, `#` comments
/// ignored, ascending x, SI units). Throws FormatError naming the offending
/// row on any violation.
std::shared_ptr<const TabulatedForceModel> load_force_table(const std::string& path,
                                                            double d0);

}  // namespace casim
