#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace axiswalk {

/// log C(n, k) via log-gamma; -inf outside 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

struct BinomialPoint {
    double exact = 0.0;    ///< P(Z_k = x) = 2^-k C(k, (k-x)/2)
    double gaussian = 0.0; ///< sqrt(2/(pi k)) exp(-x^2/(2k))
};

/// Point probability of the simple symmetric walk on Z and its local-limit
/// approximation. Requires k >= 1.
BinomialPoint binomial_point(std::int64_t k, std::int64_t x);

/// P_x(min_{1<=i<=k} Z_i > 0, Z_k = y) by reflection. Requires x, y >= 1; k >= 0.
double reflection_stay_positive(std::int64_t x, std::int64_t y, std::int64_t k);

/// P_u(min_{1<=i<=m} Z_i > 0) as the sum of reflection_stay_positive over endpoints.
double stay_positive(std::int64_t u, std::int64_t m);
/// Same quantity as P(-u < Z_m <= u) for the walk started at 0.
double stay_positive_closed_form(std::int64_t u, std::int64_t m);

/// P(Z_n >= z) for the walk started at 0.
double binomial_upper_tail(std::int64_t n, std::int64_t z);

/// exp(-eps^2 k / 6).
double chernoff_window_bound(std::int64_t k, double eps);
/// Integer range [ceil((k-1)(1-eps)/2), floor((k-1)(1+eps)/2)].
std::pair<std::int64_t, std::int64_t> chernoff_window(std::int64_t k, double eps);

struct SemiAnalyticValue {
    double value = 0.0;          ///< windowed partial sum over k <= K
    double window_budget = 0.0;  ///< bound on the dropped off-window terms
    double tail_estimate = 0.0;  ///< k > K contribution from the k^-3 decay of the summand
    std::int64_t k_max = 0;
    double error_budget() const { return window_budget + tail_estimate; }
};

struct SemiAnalyticOptions {
    std::int64_t k_max = 0; ///< 0 selects 100 x^2
    /// Per-k cap on the Chernoff budget; the window half-width is the
    /// smallest one meeting it.
    double window_tolerance = 1e-18;
};

/// P_{(1,x)}(X_eta = (y,0), eta <= K) from the horizontal/vertical split of the
/// walk into two one-dimensional ballot problems. Equals P_{(y,1)}(X_eta = (0,x)).
SemiAnalyticValue cone_exit_semianalytic(std::int64_t x, std::int64_t y, const SemiAnalyticOptions& opts = {});

/// P_{(1,x)}(eta = k) by the same decomposition.
SemiAnalyticValue eta_tail_semianalytic(std::int64_t x, std::int64_t k, double window_tolerance = 1e-18);

/// Window half-width (as a fraction eps of k-1) used for step count k.
double adaptive_window_eps(std::int64_t k, double tolerance);

} // namespace axiswalk
