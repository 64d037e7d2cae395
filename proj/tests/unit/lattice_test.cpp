#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "axiswalk/lattice.hpp"
#include "axiswalk/random.hpp"
#include "property.hpp"

namespace axiswalk {
namespace {

using testing::for_all;
using testing::Gen;

TEST(Classify, SpecExamples) {
    EXPECT_EQ(classify({0, 0}).kind, RegionKind::Kind::Origin);
    const RegionKind r = classify({4, 0});
    EXPECT_EQ(r.kind, RegionKind::Kind::AxisArm);
    EXPECT_EQ(r.arm, Arm::PlusX1);
    EXPECT_EQ(r.level, 4);
    EXPECT_EQ(classify({2, -7}).kind, RegionKind::Kind::Cone);
    EXPECT_EQ(classify({0, -3}).arm, Arm::MinusX2);
}

TEST(MaxNorm, SpecExamples) {
    EXPECT_EQ(max_norm({-3, 2}), 3);
    EXPECT_EQ(max_norm({0, 0}), 0);
    EXPECT_EQ(max_norm({5, 5}), 5);
}

TEST(Classify, PartitionProperty) {
    for_all(11, 2000, [](Gen& g, int) {
        const LatticePoint p = g.any_site(1000);
        const RegionKind r = classify(p);
        if (p.x1 != 0 && p.x2 != 0) {
            EXPECT_EQ(r.kind, RegionKind::Kind::Cone);
        } else if (p == LatticePoint{0, 0}) {
            EXPECT_EQ(r.kind, RegionKind::Kind::Origin);
            EXPECT_EQ(max_norm(p), 0);
        } else {
            EXPECT_EQ(r.kind, RegionKind::Kind::AxisArm);
            EXPECT_EQ(r.level, max_norm(p));
            EXPECT_EQ(arm_site(r.arm, r.level), p);
        }
    });
}

TEST(TransitionDistribution, AxisLevelOneIsUniform) {
    const TransitionDist d = transition_distribution({1, 0}, WalkParams(7.0));
    ASSERT_EQ(d.size, 4u);
    for (const LatticePoint q : {LatticePoint{2, 0}, LatticePoint{1, 1}, LatticePoint{1, -1}, LatticePoint{0, 0}}) {
        EXPECT_DOUBLE_EQ(d.probability_of(q), 0.25);
    }
}

TEST(TransitionDistribution, AxisLevelTwo) {
    const TransitionDist d = transition_distribution({0, 2}, WalkParams(2.0));
    EXPECT_NEAR(d.probability_of({0, 3}), 1.0 / 16, 1e-15);
    EXPECT_NEAR(d.probability_of({1, 2}), 1.0 / 16, 1e-15);
    EXPECT_NEAR(d.probability_of({-1, 2}), 1.0 / 16, 1e-15);
    EXPECT_NEAR(d.probability_of({0, 1}), 13.0 / 16, 1e-15);
}

TEST(TransitionDistribution, ConeIsSimpleWalk) {
    for (const double alpha : {0.0, 2.5, 9.0}) {
        const TransitionDist d = transition_distribution({-3, 5}, WalkParams(alpha));
        ASSERT_EQ(d.size, 4u);
        for (const Outcome& o : d) {
            EXPECT_EQ(o.probability, 0.25);
        }
    }
}

TEST(TransitionDistribution, RowsAreProbabilityVectors) {
    for_all(12, 4000, [](Gen& g, int) {
        const WalkParams params(g.real(0.0, 6.0));
        const LatticePoint p = g.coin() ? g.axis_site(1000) : g.any_site(1000);
        const TransitionDist d = transition_distribution(p, params);
        double sum = 0.0;
        for (const Outcome& o : d) {
            EXPECT_GE(o.probability, 0.0);
            EXPECT_LE(o.probability, 1.0);
            EXPECT_EQ(std::abs(o.site.x1 - p.x1) + std::abs(o.site.x2 - p.x2), 1);
            sum += o.probability;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
    });
}

TEST(TransitionDistribution, CommutesWithDihedralGroup) {
    for_all(13, 3000, [](Gen& g, int) {
        const WalkParams params(g.real(1.0, 5.0));
        const LatticePoint p = g.coin() ? g.axis_site(200) : g.any_site(200);
        const Symmetry s = g.symmetry();
        const TransitionDist d = transition_distribution(p, params);
        const TransitionDist ds = transition_distribution(s.apply(p), params);
        for (const Outcome& o : d) {
            EXPECT_DOUBLE_EQ(ds.probability_of(s.apply(o.site)), o.probability);
        }
    });
}

TEST(DihedralGroup, HasEightDistinctElements) {
    const auto group = dihedral_group();
    std::set<LatticePoint> images;
    for (const Symmetry& s : group) {
        images.insert(s.apply({1, 2}));
    }
    EXPECT_EQ(images.size(), 8u);
}

TEST(Step, InverseCdfBuckets) {
    const WalkParams p4(4.0);
    EXPECT_EQ(step_with_draw({0, 0}, p4, 0.10), (LatticePoint{1, 0}));
    EXPECT_EQ(step_with_draw({0, 0}, p4, 0.30), (LatticePoint{-1, 0}));
    EXPECT_EQ(step_with_draw({0, 0}, p4, 0.60), (LatticePoint{0, 1}));
    EXPECT_EQ(step_with_draw({0, 0}, p4, 0.99), (LatticePoint{0, -1}));
    EXPECT_EQ(step_with_draw({2, 0}, WalkParams(2.0), 0.999), (LatticePoint{1, 0}));
    EXPECT_EQ(step_with_draw({2, 0}, WalkParams(2.0), 0.0), (LatticePoint{3, 0}));
}

TEST(Step, EmpiricalFrequenciesMatchKernel) {
    constexpr int kSamples = 1'000'000;
    const WalkParams params(2.0);
    for (const LatticePoint p : {LatticePoint{0, 2}, LatticePoint{0, 0}, LatticePoint{-4, 0}, LatticePoint{3, -1}}) {
        SCOPED_TRACE(to_string(p));
        RandomSource rng(2024, 5);
        std::map<LatticePoint, int> counts;
        for (int i = 0; i < kSamples; ++i) {
            ++counts[step(p, params, rng)];
        }
        const TransitionDist d = transition_distribution(p, params);
        for (const Outcome& o : d) {
            const double sd = std::sqrt(kSamples * o.probability * (1.0 - o.probability));
            EXPECT_LE(std::abs(counts[o.site] - kSamples * o.probability), 4.0 * sd) << to_string(o.site);
        }
        EXPECT_EQ(counts.size(), d.size);
    }
}

TEST(WalkParams, RejectsNegativeAlpha) {
    EXPECT_THROW(WalkParams(-0.5), PreconditionError);
    EXPECT_THROW(WalkParams(std::nan("")), PreconditionError);
    EXPECT_NEAR(WalkParams(3.0).outward_probability(2), 1.0 / 32, 1e-16);
}

} // namespace
} // namespace axiswalk
