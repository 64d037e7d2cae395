#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "axiswalk/lattice.hpp"
#include "axiswalk/measure.hpp"

namespace axiswalk {

enum class EmbeddedChain {
    Entry, ///< X_{eta_i}, on the axes
    Exit   ///< X_{rho_i}, on the cone boundary
};

struct InvariantResult {
    EmpiricalMeasure measure; ///< normalised fixed point
    std::size_t iterations = 0;
    double residual = 0.0; ///< || normalise(pi P) - pi ||_1
    double leak = 0.0;     ///< 1 - |pi P|, mass lost to truncation per step
};

struct InvariantOptions {
    double tol = 1e-10; ///< total-variation change between iterates
    std::size_t max_iterations = 100000;
};

/// Both embedded kernels on the radius-R truncation: A (axis -> cone
/// boundary, from the axis chain) and C (cone boundary -> axis, from the
/// quadrant Green's function).
class EmbeddedKernels {
  public:
    EmbeddedKernels(const WalkParams& params, std::int64_t R);
    ~EmbeddedKernels();
    EmbeddedKernels(EmbeddedKernels&&) noexcept;
    EmbeddedKernels& operator=(EmbeddedKernels&&) noexcept;

    std::int64_t radius() const;
    const std::vector<LatticePoint>& axis_states() const;     ///< origin excluded
    const std::vector<LatticePoint>& boundary_states() const; ///< cone sites with min |x_i| = 1

    /// Power iteration on A C (Entry) or C A (Exit), renormalised each step.
    InvariantResult invariant(EmbeddedChain chain, const InvariantOptions& opts) const;

    /// E_x[rho] for each axis state.
    const std::vector<double>& expected_rho() const;
    /// E_x[visits to the origin before rho] for each axis state.
    const std::vector<double>& origin_visits() const;
    /// E_x[max_norm(X_rho)] for each axis state.
    const std::vector<double>& exit_norm_mean() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Fixed point of the embedded chain. Requires alpha > 1 and R >= 20.
InvariantResult embedded_invariant(EmbeddedChain chain, const WalkParams& params, std::int64_t R,
                                   const InvariantOptions& opts = {});

struct Constants {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c = 0.0;
    double c_prime = 0.0;
    std::map<std::string, double> c_f;
    double mean_exit_norm = 0.0;       ///< E_{pi dagger}[max_norm]
    double mean_rho = 0.0;             ///< E_{pi*}[rho]
    double mean_origin_visits = 0.0;   ///< E_{pi*}[L((0,0), rho)]
    double mean_exit_norm_from_entry = 0.0; ///< E_{pi*}[max_norm(X_rho)]
    InvariantResult entry;
    InvariantResult exit;
};

/// Limit constants from the truncated embedded chains. Requires alpha > 3
/// unless allow_subcritical is set (then alpha > 1).
Constants compute_constants(const WalkParams& params, std::int64_t R, const InvariantOptions& opts = {},
                            bool allow_subcritical = false);

} // namespace axiswalk
