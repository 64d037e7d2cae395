#pragma once

#include <cstdint>
#include <vector>

#include "axiswalk/lattice.hpp"
#include "axiswalk/measure.hpp"

namespace axiswalk {

/// Exit law of the simple random walk from a cone site, by time-stepping DP
/// on the quadrant containing the start. Sites with max_norm >= R are killed.
struct ConeExitResult {
    EmpiricalMeasure exit_law;     ///< law of X_eta restricted to eta <= T; deficit = alive + escaped
    std::vector<double> time_law;  ///< time_law[t] = P(eta = t), t = 0..T
    double alive = 0.0;            ///< P(eta > T, not killed)
    double escaped = 0.0;          ///< P(killed at the radius before eta, before T)
};

ConeExitResult cone_exit(LatticePoint start, std::int64_t R, std::int64_t T);

/// Green's function of the simple random walk in the box [1, R-1]^2, killed
/// on leaving it, by sine-series diagonalisation. Exposes the blocks needed
/// for exit laws from cone-boundary sites.
class QuadrantGreen {
  public:
    explicit QuadrantGreen(std::int64_t R);

    std::int64_t radius() const { return R_; }
    /// P_w(X_eta = z) for w on the boundary of the positive quadrant
    /// (w.x1 == 1 or w.x2 == 1) and z = (0,j) or (j,0), 1 <= j <= R-1.
    double exit_probability(LatticePoint w, LatticePoint z) const;

  private:
    std::int64_t R_;
    std::vector<double> same_side_;  // G((1,u),(1,j)), row-major (R-1)^2
    std::vector<double> cross_side_; // G((1,u),(j,1))
};

/// Sum over cone-boundary sites y with max_norm(y) <= R of P_y(X_eta = x, eta <= T),
/// with killing at max_norm > R.
double reverse_sum(LatticePoint x, std::int64_t R, std::int64_t T);

struct ReverseSumEstimate {
    double value = 0.0;        ///< reverse_sum(x, R, T)
    double coarse = 0.0;       ///< reverse_sum(x, R/2, T/4)
    double extrapolated = 0.0; ///< value + (value - coarse) / 3
};

/// Richardson extrapolation assuming an O(R^-2) truncation error with T ~ R^2.
ReverseSumEstimate reverse_sum_extrapolated(LatticePoint x, std::int64_t R, std::int64_t T);

} // namespace axiswalk
