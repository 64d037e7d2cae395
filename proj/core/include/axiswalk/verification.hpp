#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "axiswalk/invariant.hpp"
#include "axiswalk/serialize.hpp"

namespace axiswalk {

/// Parameters of the verification suite. Tolerances are fixed in the
/// criteria themselves; these only set problem sizes.
struct VerifyConfig {
    double alpha = 4.0;
    std::int64_t R = 200;            ///< truncation radius for axis/embedded solves
    std::int64_t reverse_R = 150;    ///< radius for the reverse sum
    std::int64_t reverse_T = 200000; ///< time horizon for the reverse sum
    std::uint64_t n = 10'000'000;
    std::uint64_t replicas = 50;
    std::uint64_t seed = 7;
    unsigned jobs = 1;
    bool allow_subcritical = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    Json measured = Json::object();
    std::string detail;
    double seconds = 0.0; ///< wall time; never serialised into artifacts
};

inline constexpr int kCriterionCount = 11;

std::string criterion_name(int id);
/// Wall-clock budget in seconds.
double criterion_budget_seconds(int id);

CriterionResult run_criterion(int id, const VerifyConfig& cfg);

/// Deterministic artifact form (no timings).
Json to_json(const CriterionResult& r);

/// Constants for (alpha, R), memoised for the life of the process.
const Constants& cached_constants(double alpha, std::int64_t R, bool allow_subcritical = false);

} // namespace axiswalk
