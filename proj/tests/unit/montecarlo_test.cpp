#include <gtest/gtest.h>

#include <cmath>

#include "axiswalk/montecarlo.hpp"
#include "axiswalk/serialize.hpp"

namespace axiswalk {
namespace {

Campaign small_campaign(unsigned jobs) {
    Campaign c;
    c.alpha = 4.0;
    c.n = 200000;
    c.replicas = 6;
    c.base_seed = 31;
    c.checkpoints = {2000, 20000};
    c.jobs = jobs;
    return c;
}

TEST(Summarize, MeanAndStandardError) {
    const Estimate e = summarize({1.0, 2.0, 3.0, 4.0});
    EXPECT_DOUBLE_EQ(e.mean, 2.5);
    EXPECT_NEAR(e.std_error, std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
    EXPECT_EQ(e.count, 4u);
}

TEST(Replicate, DeterministicAcrossRepeatsAndJobs) {
    const EstimateReport a = replicate(small_campaign(1));
    const EstimateReport b = replicate(small_campaign(1));
    const EstimateReport c = replicate(small_campaign(4));
    const std::string ja = to_json(a).dump();
    EXPECT_EQ(ja, to_json(b).dump());
    EXPECT_EQ(ja, to_json(c).dump());
    EXPECT_TRUE(a.merged == c.merged);
}

TEST(Replicate, ReplicaUsesItsStream) {
    const Campaign camp = small_campaign(2);
    const EstimateReport r = replicate(camp);
    ASSERT_EQ(r.replica_values.size(), camp.replicas);
    const RunStats third = run_walk(WalkParams(camp.alpha), camp.n, camp.base_seed, builtin_functionals(), 2);
    EXPECT_EQ(r.replica_values[2].at("axis_local_time"), theorem_estimates(third).at("axis_local_time"));
}

TEST(Replicate, HorizonsIncreaseAndEndAtN) {
    const EstimateReport r = replicate(small_campaign(2));
    ASSERT_EQ(r.horizons.size(), 3u);
    EXPECT_EQ(r.horizons[0].n, 2000u);
    EXPECT_EQ(r.final_horizon().n, 200000u);
    EXPECT_EQ(r.final_horizon().estimates.at("excursion_rate").count, 6u);
}

TEST(Replicate, RequiresTwoReplicas) {
    Campaign c = small_campaign(1);
    c.replicas = 1;
    EXPECT_THROW(replicate(c), PreconditionError);
}

TEST(EmpiricalInvariants, NormalisedWithTailSlopes) {
    Campaign c = small_campaign(4);
    c.n = 2'000'000;
    c.replicas = 8;
    const EstimateReport r = replicate(c);
    ASSERT_GE(r.merged.excursions, 10000u);
    const EmpiricalInvariants inv = empirical_invariants(r);
    EXPECT_NEAR(inv.entry.total(), 1.0, 1e-12);
    EXPECT_NEAR(inv.exit.total(), 1.0, 1e-12);
    EXPECT_NEAR(inv.entry_slope.slope, -3.0, 0.6);
    EXPECT_LT(inv.exit_slope.slope, -4.0);
}

TEST(EmpiricalInvariants, RejectsShortRuns) {
    Campaign c = small_campaign(1);
    c.n = 10000;
    c.replicas = 2;
    EXPECT_THROW(empirical_invariants(replicate(c)), PreconditionError);
}

TEST(MomentCheck, StreamedAndHistogramMeansAgree) {
    const EstimateReport r = replicate(small_campaign(4));
    const MomentCheck m = moment_check(r);
    EXPECT_NEAR(m.beta1_mean, m.beta1_histogram_mean, 1e-9 * m.beta1_mean);
    EXPECT_DOUBLE_EQ(m.threshold, std::pow(200000.0, 0.55));
    EXPECT_GE(m.fraction_clean_replicas, 0.0);
    EXPECT_LE(m.fraction_clean_replicas, 1.0);
}

TEST(DurationChiSquare, AcceptsTheAxisChainLaw) {
    Campaign c = small_campaign(4);
    c.n = 2'000'000;
    const ChiSquareResult chi = duration_chi_square(replicate(c));
    EXPECT_GT(chi.dof, 5u);
    EXPECT_GT(chi.p_value, 0.01);
}

} // namespace
} // namespace axiswalk
