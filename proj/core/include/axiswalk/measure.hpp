#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "axiswalk/lattice.hpp"

namespace axiswalk {

/// Sparse mass function over sites plus the mass lost to truncation.
class EmpiricalMeasure {
  public:
    using Map = std::map<LatticePoint, double>;

    EmpiricalMeasure() = default;
    explicit EmpiricalMeasure(Map mass, double deficit = 0.0);

    void add(LatticePoint p, double m);
    double mass_of(LatticePoint p) const;
    const Map& support() const { return mass_; }
    double deficit() const { return deficit_; }
    void set_deficit(double d) { deficit_ = d; }

    double total() const;
    /// Copy scaled to total mass 1 (deficit reset to 0).
    EmpiricalMeasure normalized() const;
    double expectation(const std::function<double(LatticePoint)>& f) const;
    bool empty() const { return mass_.empty(); }

  private:
    Map mass_;
    double deficit_ = 0.0;
};

/// Mass summed over max-norm shells: shell[r] = sum of mass on {max_norm = r}.
std::map<std::int64_t, double> shell_masses(const EmpiricalMeasure& m);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    std::size_t points = 0;
};

/// Ordinary least squares of y on x. Requires at least two distinct x.
LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

/// Which boundary the per-site correction refers to.
enum class ShellGeometry {
    Axis,        ///< 4 sites per shell r >= 1
    ConeBoundary ///< 8 sites per shell r >= 2, 4 at r = 1
};

std::int64_t shell_size(ShellGeometry g, std::int64_t r);

/// Fit log(per-site mass) against log(max norm) over shells r in [lo, hi].
/// When `counts` is given, shells with fewer than `min_count` observations
/// are dropped.
LinearFit fit_tail_slope(const EmpiricalMeasure& m, ShellGeometry g, std::int64_t lo, std::int64_t hi,
                         const std::map<std::int64_t, double>* counts = nullptr, double min_count = 0.0);

} // namespace axiswalk
