#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "axiswalk/excursion.hpp"
#include "property.hpp"

namespace axiswalk {
namespace {

using testing::for_all;
using testing::Gen;

TEST(Functionals, BuiltinExamples) {
    AxisLocalTime axis;
    for (int i = 0; i < 7; ++i) {
        axis.push({0, i + 1});
    }
    EXPECT_EQ(axis.value(), 7.0);

    OriginLocalTime origin;
    for (const LatticePoint p : {LatticePoint{0, 1}, LatticePoint{0, 2}, LatticePoint{3, 0}}) {
        origin.push(p);
    }
    EXPECT_EQ(origin.value(), 0.0);
    origin.reset();
    for (const LatticePoint p : {LatticePoint{0, 1}, LatticePoint{0, 0}, LatticePoint{0, 1}, LatticePoint{0, 0}}) {
        origin.push(p);
    }
    EXPECT_EQ(origin.value(), 2.0);
}

TEST(Functionals, PositiveAndNonDecreasing) {
    for_all(21, 200, [](Gen& g, int) {
        FunctionalList fs = builtin_functionals();
        std::vector<double> last(fs.size(), 0.0);
        const int len = static_cast<int>(g.integer(1, 60));
        for (int k = 0; k < len; ++k) {
            const LatticePoint p = g.coin() ? LatticePoint{0, 0} : g.axis_site(5);
            for (std::size_t j = 0; j < fs.size(); ++j) {
                fs[j]->push(p);
                EXPECT_GE(fs[j]->value(), last[j]);
                last[j] = fs[j]->value();
            }
        }
    });
}

TEST(Functionals, UnknownIdRejected) {
    EXPECT_THROW(functionals_by_id({"axis_local_time", "nope"}), PreconditionError);
    EXPECT_EQ(functionals_by_id({"origin_local_time"}).front()->id(), "origin_local_time");
}

TEST(TheoremEstimates, ZeroAxisTimeGivesZero) {
    RunStats s;
    s.n = 100;
    EXPECT_EQ(theorem_estimates(s).at("axis_local_time"), 0.0);
}

TEST(TheoremEstimates, ScalesByLogNOverN) {
    RunStats s;
    s.n = 1000;
    s.local_time_axis = 200;
    s.local_time_origin = 10;
    s.excursions = 50;
    const auto e = theorem_estimates(s);
    const double scale = std::log(1000.0) / 1000.0;
    EXPECT_DOUBLE_EQ(e.at("axis_local_time"), 200 * scale);
    EXPECT_DOUBLE_EQ(e.at("origin_local_time"), 10 * scale);
    EXPECT_DOUBLE_EQ(e.at("excursion_rate"), 50 * scale);
}

TEST(Walker, ExcursionBracketingAndSites) {
    for_all(22, 12, [](Gen& g, int) {
        const WalkParams params(g.real(3.5, 6.0));
        Walker w(params, static_cast<std::uint64_t>(g.integer(0, 1 << 30)), 0, builtin_functionals());
        std::vector<ExcursionRecord> records;
        w.set_observer([&](const ExcursionRecord& r) { records.push_back(r); });
        w.advance_to(200000);
        const RunStats s = w.stats();
        ASSERT_EQ(records.size(), s.excursions);
        std::uint64_t prev_rho = 0;
        std::uint64_t axis_sum = 0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            const ExcursionRecord& r = records[i];
            EXPECT_EQ(r.index, i + 1);
            EXPECT_LT(prev_rho, r.eta);
            EXPECT_LT(r.eta, r.rho);
            EXPECT_TRUE(on_axis(r.entry_site));
            EXPECT_TRUE(on_cone_boundary(r.exit_site));
            EXPECT_EQ(r.functional_values.at(0), static_cast<double>(r.rho - r.eta));
            axis_sum += r.rho - r.eta;
            prev_rho = r.rho;
        }
        EXPECT_EQ(axis_sum, s.axis_time_completed);
        EXPECT_EQ(s.local_time_axis, s.axis_time_completed + s.tail_axis_time);
        EXPECT_EQ(s.local_time_axis + s.local_time_cone, s.n);
        EXPECT_LE(s.local_time_origin, s.local_time_axis);
        EXPECT_EQ(s.functionals.at(0).sum, static_cast<double>(s.axis_time_completed));
        EXPECT_EQ(s.functionals.at(0).tail, static_cast<double>(s.tail_axis_time));
        EXPECT_TRUE(s.entries == s.excursions || s.entries == s.excursions + 1);
    });
}

TEST(Walker, TailOnlyCountedInAxisPhase) {
    const WalkParams params(4.0);
    Walker w(params, 3, 0, builtin_functionals());
    for (std::uint64_t n = 1; n < 3000; ++n) {
        w.advance_to(n);
        const RunStats s = w.stats();
        if (w.on_axis_phase()) {
            ASSERT_GT(s.tail_axis_time, 0u);
        } else {
            ASSERT_EQ(s.tail_axis_time, 0u);
        }
    }
}

TEST(Walker, ResumeEqualsContinuousRun) {
    for_all(23, 20, [](Gen& g, int) {
        const WalkParams params(4.0);
        const auto seed = static_cast<std::uint64_t>(g.integer(0, 1000000));
        const auto n = static_cast<std::uint64_t>(g.integer(1000, 50000));
        const auto split = static_cast<std::uint64_t>(g.integer(0, static_cast<std::int64_t>(n)));
        Walker a(params, seed, 1, builtin_functionals());
        a.advance_to(split);
        Walker saved = a; // snapshot
        saved.advance_to(n);
        EXPECT_EQ(saved.stats(), run_walk(params, n, seed, builtin_functionals(), 1));
    });
}

TEST(Walker, ExcursionCountNonDecreasing) {
    const std::vector<std::uint64_t> horizons{10, 100, 1000, 10000, 100000};
    const auto stats = run_walk_checkpoints(WalkParams(4.0), horizons, 77, builtin_functionals());
    ASSERT_EQ(stats.size(), horizons.size());
    for (std::size_t i = 1; i < stats.size(); ++i) {
        EXPECT_LE(stats[i - 1].excursions, stats[i].excursions);
        EXPECT_EQ(stats[i].n, horizons[i]);
    }
    EXPECT_EQ(stats.back(), run_walk(WalkParams(4.0), 100000, 77, builtin_functionals()));
}

TEST(Walker, DifferentStreamsDiffer) {
    const WalkParams params(4.0);
    EXPECT_FALSE(run_walk(params, 10000, 5, {}, 0) == run_walk(params, 10000, 5, {}, 1));
    EXPECT_TRUE(run_walk(params, 10000, 5, {}, 2) == run_walk(params, 10000, 5, {}, 2));
}

TEST(Merge, AssociativeAndCommutative) {
    const WalkParams params(4.0);
    std::vector<RunStats> parts;
    for (std::uint64_t r = 0; r < 6; ++r) {
        parts.push_back(run_walk(params, 20000, 9, builtin_functionals(), r));
    }
    const RunStats reference = std::accumulate(parts.begin() + 1, parts.end(), parts.front(), merge);
    for_all(24, 30, [&](Gen& g, int) {
        std::vector<RunStats> shuffled = parts;
        std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
        // Random binary bracketing: repeatedly merge two random neighbours.
        while (shuffled.size() > 1) {
            const auto i = static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(shuffled.size()) - 2));
            shuffled[i] = merge(shuffled[i], shuffled[i + 1]);
            shuffled.erase(shuffled.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        }
        const RunStats& m = shuffled.front();
        EXPECT_EQ(m.excursions, reference.excursions);
        EXPECT_EQ(m.local_time_axis, reference.local_time_axis);
        EXPECT_EQ(m.max_entry_norm, reference.max_entry_norm);
        EXPECT_EQ(m.entry_histogram, reference.entry_histogram);
        EXPECT_EQ(m.duration_histogram, reference.duration_histogram);
        EXPECT_NEAR(m.entry_norm_sum, reference.entry_norm_sum, 1e-9 * reference.entry_norm_sum);
    });
    std::int64_t max_norm_seen = 0;
    for (const auto& p : parts) {
        max_norm_seen = std::max(max_norm_seen, p.max_entry_norm);
    }
    EXPECT_EQ(reference.max_entry_norm, max_norm_seen);
}

} // namespace
} // namespace axiswalk
