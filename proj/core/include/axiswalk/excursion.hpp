#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "axiswalk/functional.hpp"
#include "axiswalk/lattice.hpp"
#include "axiswalk/random.hpp"

namespace axiswalk {

/// One two-type excursion: the walk enters the axes at eta and re-enters the
/// cone at rho.
struct ExcursionRecord {
    std::uint64_t index = 0;
    std::uint64_t eta = 0;
    std::uint64_t rho = 0;
    LatticePoint entry_site;
    LatticePoint exit_site;
    std::vector<double> functional_values;
};

struct FunctionalTotal {
    std::string id;
    double sum = 0.0;  ///< sum over completed excursions
    double tail = 0.0; ///< value on the incomplete axis segment at time n

    friend bool operator==(const FunctionalTotal&, const FunctionalTotal&) = default;
};

/// Entry norms are bucketed by excursion index in blocks of this size.
inline constexpr std::uint64_t kEntryBucket = 1024;
/// Exponent of the per-excursion entry-norm moment that is tracked.
inline constexpr double kEntryMomentBeta = 1.5;

/// Streaming aggregate of a trajectory of length n started at (1,1).
struct RunStats {
    std::uint64_t n = 0;
    std::uint64_t excursions = 0; ///< N_n
    std::uint64_t entries = 0;    ///< number of i with eta_i <= n
    std::uint64_t local_time_axis = 0;
    std::uint64_t local_time_origin = 0;
    std::uint64_t local_time_cone = 0;
    std::uint64_t cone_time_completed = 0; ///< sum of eta_i - rho_{i-1}, i <= N_n
    std::uint64_t axis_time_completed = 0; ///< sum of rho_i - eta_i, i <= N_n
    std::uint64_t tail_axis_time = 0;
    std::int64_t max_entry_norm = 0;
    double entry_norm_sum = 0.0;
    std::vector<FunctionalTotal> functionals;
    std::map<LatticePoint, std::uint64_t> entry_histogram;
    std::map<LatticePoint, std::uint64_t> exit_histogram;
    std::map<std::uint64_t, std::uint64_t> duration_histogram; ///< law of rho_i - eta_i
    std::vector<double> entry_moment_buckets;                 ///< sums of entry norm^1.5
    std::vector<std::uint64_t> entry_bucket_counts;

    friend bool operator==(const RunStats&, const RunStats&) = default;
};

/// Component-wise sum; max_entry_norm merges by max.
RunStats merge(const RunStats& a, const RunStats& b);

/// Sites beyond this max norm abort a run.
inline constexpr std::int64_t kMaxSiteNorm = 1'000'000;

/// Resumable simulator of one trajectory. Copying a Walker snapshots it.
class Walker {
  public:
    using Observer = std::function<void(const ExcursionRecord&)>;

    Walker(const WalkParams& params, std::uint64_t seed, std::uint64_t stream, FunctionalList functionals);
    Walker(const Walker& other);
    Walker& operator=(const Walker& other);
    Walker(Walker&&) noexcept = default;
    Walker& operator=(Walker&&) noexcept = default;
    ~Walker() = default;

    /// Simulate until time n (no-op if already there).
    void advance_to(std::uint64_t n);
    void set_observer(Observer obs) { observer_ = std::move(obs); }

    std::uint64_t time() const { return time_; }
    LatticePoint position() const { return pos_; }
    bool on_axis_phase() const { return in_axis_phase_; }
    /// Aggregate at the current time, including the incomplete tail.
    RunStats stats() const;

  private:
    double outward(std::int64_t level);
    void on_enter_axis();
    void on_enter_cone();

    WalkParams params_;
    RandomSource rng_;
    FunctionalList functionals_;
    Observer observer_;
    std::vector<double> q_;
    LatticePoint pos_{1, 1};
    std::uint64_t time_ = 0;
    bool in_axis_phase_ = false;
    std::uint64_t last_rho_ = 0;
    std::uint64_t current_eta_ = 0;
    LatticePoint current_entry_;
    RunStats acc_;
};

RunStats run_walk(const WalkParams& params, std::uint64_t n, std::uint64_t seed, const FunctionalList& functionals,
                  std::uint64_t stream = 0);

/// One trajectory observed at several increasing horizons.
std::vector<RunStats> run_walk_checkpoints(const WalkParams& params, const std::vector<std::uint64_t>& horizons,
                                           std::uint64_t seed, const FunctionalList& functionals,
                                           std::uint64_t stream = 0);

/// (log n / n)-scaled estimators: axis_local_time, origin_local_time,
/// excursion_rate and functional:<id> for each tracked functional.
std::map<std::string, double> theorem_estimates(const RunStats& stats);

} // namespace axiswalk
