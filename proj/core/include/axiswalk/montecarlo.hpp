#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "axiswalk/excursion.hpp"
#include "axiswalk/measure.hpp"

namespace axiswalk {

/// Replicated simulation: replica r uses stream id r of base_seed.
struct Campaign {
    double alpha = 4.0;
    std::uint64_t n = 1'000'000;
    std::uint64_t replicas = 2;
    std::uint64_t base_seed = 0;
    std::vector<std::string> functional_ids{"axis_local_time", "origin_local_time"};
    /// Extra observation horizons below n (each replica reports at all of them).
    std::vector<std::uint64_t> checkpoints;
    unsigned jobs = 1;
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t count = 0;
};

Estimate summarize(const std::vector<double>& values);

struct HorizonReport {
    std::uint64_t n = 0;
    std::map<std::string, Estimate> estimates;
};

struct EstimateReport {
    Campaign campaign;
    std::vector<HorizonReport> horizons; ///< increasing, last one is campaign.n
    RunStats merged;                     ///< replicas merged at the final horizon
    /// Per replica, at the final horizon: estimator name -> value.
    std::vector<std::map<std::string, double>> replica_values;
    /// Per replica: excursions whose entry norm exceeds n^0.55.
    std::vector<std::uint64_t> replica_large_entries;

    const HorizonReport& final_horizon() const { return horizons.back(); }
};

/// Per-replica estimators: theorem_estimates plus cone_time (sum of cone
/// durations over m log m, m = N_n) and entry_norm_mean.
std::map<std::string, double> replica_estimators(const RunStats& stats);

EstimateReport replicate(const Campaign& campaign);

struct EmpiricalInvariants {
    EmpiricalMeasure entry; ///< normalised law of X_{eta_i}
    EmpiricalMeasure exit;  ///< normalised law of X_{rho_i}
    LinearFit entry_slope;  ///< per-site log-log slope
    LinearFit exit_slope;
};

struct SlopeBands {
    std::int64_t entry_lo = 5;
    std::int64_t entry_hi = 40;
    std::int64_t exit_lo = 2;
    std::int64_t exit_hi = 15;
    double min_shell_count = 30.0;
};

/// Requires at least 1e4 completed excursions in the merged stats.
EmpiricalInvariants empirical_invariants(const EstimateReport& report, const SlopeBands& bands = {});

struct ConeTimeCheck {
    double empirical = 0.0; ///< replica mean of sum(eta_i - rho_{i-1}) / (m log m)
    double std_error = 0.0;
    double target = 0.0;    ///< (8/pi) E_{pi dagger}[max_norm]
    double ratio = 0.0;
};

ConeTimeCheck cone_time_check(const EstimateReport& report, double mean_exit_norm);

struct MomentCheck {
    double beta = kEntryMomentBeta;
    std::vector<double> decile_means;     ///< mean entry norm^beta per excursion-index decile
    std::vector<double> running_max;      ///< running max of bucket means
    double decile_spread = 0.0;           ///< max/min over deciles
    double threshold = 0.0;               ///< n^0.55
    double fraction_clean_replicas = 0.0; ///< replicas with no entry norm above threshold
    double beta1_mean = 0.0;              ///< streamed mean entry norm
    double beta1_histogram_mean = 0.0;    ///< E over the normalised entry histogram
    double beta1_stderr = 0.0;
};

MomentCheck moment_check(const EstimateReport& report);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 0.0;
    std::vector<double> observed;
    std::vector<double> expected;
};

/// Empirical law of rho_i - eta_i against the axis-chain law of rho started
/// from the empirical entry measure; bins 1..max_r plus a tail bin.
ChiSquareResult duration_chi_square(const EstimateReport& report, std::int64_t max_r = 20);

} // namespace axiswalk
