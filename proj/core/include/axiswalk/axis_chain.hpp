#pragma once

#include <cstdint>
#include <vector>

#include "axiswalk/lattice.hpp"
#include "axiswalk/measure.hpp"

namespace axiswalk {

/// The walk restricted to the axes until it enters the cone, truncated at
/// radius R: moves to sites with max_norm >= R are killed.
///
/// State 0 is the origin; arm a (in Arm order) and level i in [1, R-1] is
/// state 1 + a(R-1) + (i-1).
class AxisChain {
  public:
    AxisChain(const WalkParams& params, std::int64_t R);

    std::int64_t radius() const { return R_; }
    std::size_t size() const { return static_cast<std::size_t>(1 + 4 * (R_ - 1)); }
    bool contains(LatticePoint p) const;
    std::size_t index_of(LatticePoint p) const;
    LatticePoint site_of(std::size_t index) const;

    /// One-step probability of each of the three non-inward moves at level i.
    double outward(std::int64_t level) const { return q_[static_cast<std::size_t>(level)]; }
    double inward(std::int64_t level) const { return 1.0 - 3.0 * outward(level); }

    /// Solves (I - Q) u = b, Q the substochastic kernel on the truncated axes.
    std::vector<double> solve(const std::vector<double>& b) const;
    /// Solves (I - Q)^T g = b.
    std::vector<double> solve_transpose(const std::vector<double>& b) const;

    /// t(x) = E_x[rho] (killed paths stop at the killing time).
    std::vector<double> expected_time() const;
    /// g(s) = expected visits to s before rho, starting from x.
    std::vector<double> green_row(LatticePoint x) const;
    /// u(x) = expected visits to the origin before rho, for every start x.
    std::vector<double> origin_visits() const;

    /// Probability, per step, that a walker at `site` is killed at the radius.
    double killing_probability(std::size_t index) const;

  private:
    struct Tridiagonal {
        std::vector<double> lower; // coefficient of u_{i-1} at level i
        std::vector<double> upper; // coefficient of u_{i+1} at level i
        double origin_coupling;    // coefficient of u_{a,1} in the origin row
    };
    std::vector<double> solve_tree(const Tridiagonal& m, const std::vector<double>& b) const;

    WalkParams params_;
    std::int64_t R_;
    std::vector<double> q_;
    Tridiagonal forward_;
    Tridiagonal transposed_;
};

struct AxisSolveResult {
    EmpiricalMeasure absorption_law; ///< law of X_rho on the cone boundary
    double expected_rho = 0.0;
    double expected_rho_sq = 0.0;
    double origin_visits = 0.0;
    std::vector<double> survival; ///< survival[m] = P(rho > m), m = 0..M
};

/// Law of the first cone entry from an axis site, truncated at radius R.
AxisSolveResult axis_absorption(LatticePoint start, const WalkParams& params, std::int64_t R, std::int64_t M);

/// Absorption law from every state of `chain`, as g(s) * q_s masses.
/// Row x lists (cone site, probability) pairs.
EmpiricalMeasure absorption_law(const AxisChain& chain, LatticePoint start);

/// Product of one-step kernel probabilities along the shortest axis path.
double shortest_path_prob(LatticePoint x, LatticePoint y, const WalkParams& params);
double log_shortest_path_prob(LatticePoint x, LatticePoint y, const WalkParams& params);

/// Cone site adjacent to a non-origin axis site, on the +1 side of the
/// other coordinate.
LatticePoint cone_side_neighbour(LatticePoint axis_site);

/// |P_x(X_rho = y+e) - [P(x->y)/P(y->x)] (xbar/ybar)^alpha P_y(X_rho = x+e')|,
/// where P_x(X_rho = y+e) is the probability of entering the cone by the edge
/// y -> y+e (the site law when ybar >= 2).
double reversibility_residual(LatticePoint x, LatticePoint y, const WalkParams& params, std::int64_t R);

} // namespace axiswalk
