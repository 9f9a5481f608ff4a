#include "casim/force.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "casim/constants.hpp"
#include "casim/errors.hpp"
#include "casim/quadrature.hpp"

namespace casim {

// ---------------------------------------------------------------------------
// IdealCasimirModel

IdealCasimirModel::IdealCasimirModel(double area) : area_(area) {
    if (!(area > 0.0) || !std::isfinite(area))
        throw InvalidParameter("IdealCasimirModel: area must be finite and > 0");
    C_ = constants::pi * constants::pi * constants::hbar * constants::c_light *
         area_ / 240.0;
}

double IdealCasimirModel::x_max() const {
    return std::numeric_limits<double>::infinity();
}

double IdealCasimirModel::force(double x) const {
    if (!(x > 0.0)) throw DomainError("IdealCasimirModel::force: x must be > 0");
    const double x2 = x * x;
    return C_ / (x2 * x2);
}

double IdealCasimirModel::potential_primitive(double x) const {
    if (!(x > 0.0))
        throw DomainError("IdealCasimirModel::potential_primitive: x must be > 0");
    return -C_ / (3.0 * x * x * x);
}

// ---------------------------------------------------------------------------
// TabulatedForceModel

namespace {

MonotoneCubic build_loglog(const std::vector<double>& x, const std::vector<double>& F) {
    std::vector<double> lx(x.size()), lF(F.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        lx[i] = std::log(x[i]);
        lF[i] = std::log(F[i]);
    }
    return MonotoneCubic(std::move(lx), std::move(lF));
}

}  // namespace

TabulatedForceModel::TabulatedForceModel(std::vector<double> x, std::vector<double> F,
                                         double d0, std::string source)
    : x_(std::move(x)), F_(std::move(F)), d0_(d0), source_(std::move(source)),
      loglog_((validate_rows(), build_loglog(x_, F_))) {
    // Potential at the knots: W(x_.back()) = 0, accumulate inward.
    const std::size_t n = x_.size();
    W_knots_.assign(n, 0.0);
    for (std::size_t i = n - 1; i-- > 0;) {
        const double seg = integrate_adaptive(
            [this](double u) { return force_unchecked(u); }, x_[i], x_[i + 1], 1e-13);
        W_knots_[i] = W_knots_[i + 1] - seg;
    }
}

void TabulatedForceModel::validate_rows() const {
    const std::size_t n = x_.size();
    if (n != F_.size())
        throw FormatError("force table: x and F column lengths differ");
    if (n < 4) throw FormatError("force table: needs at least 4 rows, got " +
                                 std::to_string(n));
    if (!(d0_ >= 0.0))
        throw FormatError("force table: d0 must be >= 0");
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row = "row " + std::to_string(i + 1);
        if (!std::isfinite(x_[i]) || !std::isfinite(F_[i]))
            throw FormatError("force table: non-finite value at " + row);
        if (!(x_[i] > d0_))
            throw FormatError("force table: x <= d0 at " + row);
        if (!(F_[i] > 0.0))
            throw FormatError("force table: F must be > 0 at " + row);
        if (i > 0) {
            if (x_[i] == x_[i - 1])
                throw FormatError("force table: duplicate x at " + row);
            if (x_[i] < x_[i - 1])
                throw FormatError("force table: x not ascending at " + row);
            if (!(F_[i] < F_[i - 1]))
                throw FormatError("force table: F not strictly decreasing at " + row);
        }
    }
}

double TabulatedForceModel::force_unchecked(double x) const {
    return std::exp(loglog_(std::log(x)));
}

double TabulatedForceModel::force(double x) const {
    if (!(x >= x_.front()) || !(x <= x_.back()))
        throw DomainError("TabulatedForceModel::force: x outside table range");
    return force_unchecked(x);
}

double TabulatedForceModel::potential_primitive(double x) const {
    if (!(x >= x_.front()) || !(x <= x_.back()))
        throw DomainError("TabulatedForceModel::potential_primitive: x outside range");
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    if (i == 0) i = 1;
    if (i > x_.size() - 1) i = x_.size() - 1;
    // W(x) = W(x_i) - int_x^{x_i} F
    const double seg = integrate_adaptive(
        [this](double u) { return force_unchecked(u); }, x, x_[i], 1e-13,
        1e-13 * std::abs(W_knots_.front()));
    return W_knots_[i] - seg;
}

// ---------------------------------------------------------------------------
// CSV loader

std::shared_ptr<const TabulatedForceModel> load_force_table(const std::string& path,
                                                            double d0) {
    std::ifstream in(path);
    if (!in) throw FormatError("force table: cannot open '" + path + "'");
    std::string line;
    std::vector<double> xs, Fs;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip trailing CR and surrounding spaces
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        const std::string where = "line " + std::to_string(lineno);
        if (!header_seen) {
            std::string h = line.substr(start);
            h.erase(std::remove_if(h.begin(), h.end(),
                                   [](char c) { return c == ' ' || c == '\t'; }),
                    h.end());
            if (h != "x_m,F_N")
                throw FormatError("force table '" + path +
                                  "': expected header 'x_m,F_N' at " + where);
            header_seen = true;
            continue;
        }
        std::istringstream ss(line);
        std::string a, b, extra;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
            throw FormatError("force table '" + path + "': need two columns at " + where);
        if (std::getline(ss, extra, ',') && !extra.empty())
            throw FormatError("force table '" + path + "': too many columns at " + where);
        try {
            std::size_t pa = 0, pb = 0;
            const double x = std::stod(a, &pa);
            const double F = std::stod(b, &pb);
            while (pa < a.size() && std::isspace(static_cast<unsigned char>(a[pa]))) ++pa;
            while (pb < b.size() && std::isspace(static_cast<unsigned char>(b[pb]))) ++pb;
            if (pa != a.size() || pb != b.size()) throw std::invalid_argument("");
            xs.push_back(x);
            Fs.push_back(F);
        } catch (const std::exception&) {
            throw FormatError("force table '" + path + "': unparsable number at " + where);
        }
    }
    if (!header_seen)
        throw FormatError("force table '" + path + "': missing header row 'x_m,F_N'");
    return std::make_shared<TabulatedForceModel>(std::move(xs), std::move(Fs), d0,
                                                 "table:" + path);
}

}  // namespace casim
