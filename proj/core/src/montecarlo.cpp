#include "axiswalk/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "axiswalk/axis_chain.hpp"

namespace axiswalk {

Estimate summarize(const std::vector<double>& values) {
    Estimate e;
    e.count = values.size();
    if (values.empty()) {
        return e;
    }
    double s = 0.0;
    for (const double v : values) {
        s += v;
    }
    e.mean = s / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (const double v : values) {
            ss += (v - e.mean) * (v - e.mean);
        }
        e.std_error = std::sqrt(ss / static_cast<double>(values.size() - 1) / static_cast<double>(values.size()));
    }
    return e;
}

std::map<std::string, double> replica_estimators(const RunStats& stats) {
    auto out = theorem_estimates(stats);
    const double m = static_cast<double>(stats.excursions);
    out["cone_time"] = m > 1.0 ? static_cast<double>(stats.cone_time_completed) / (m * std::log(m)) : 0.0;
    out["entry_norm_mean"] =
        stats.entries > 0 ? stats.entry_norm_sum / static_cast<double>(stats.entries) : 0.0;
    return out;
}

namespace {

std::uint64_t count_large_entries(const RunStats& s, double threshold) {
    std::uint64_t c = 0;
    for (const auto& [site, count] : s.entry_histogram) {
        if (static_cast<double>(max_norm(site)) > threshold) {
            c += count;
        }
    }
    return c;
}

} // namespace

EstimateReport replicate(const Campaign& campaign) {
    if (campaign.replicas < 2) {
        throw PreconditionError("a campaign needs at least 2 replicas");
    }
    if (campaign.n < 2) {
        throw PreconditionError("campaign horizon n must be >= 2");
    }
    const WalkParams params(campaign.alpha);
    const FunctionalList functionals = functionals_by_id(campaign.functional_ids);

    std::vector<std::uint64_t> horizons;
    for (const auto h : campaign.checkpoints) {
        if (h >= 2 && h < campaign.n) {
            horizons.push_back(h);
        }
    }
    horizons.push_back(campaign.n);
    std::sort(horizons.begin(), horizons.end());
    horizons.erase(std::unique(horizons.begin(), horizons.end()), horizons.end());

    const auto R = static_cast<std::size_t>(campaign.replicas);
    std::vector<std::vector<RunStats>> results(R);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(R);
    auto worker = [&]() {
        for (std::size_t r = next++; r < R; r = next++) {
            try {
                results[r] = run_walk_checkpoints(params, horizons, campaign.base_seed, functionals, r);
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(campaign.jobs, static_cast<unsigned>(R)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    EstimateReport report;
    report.campaign = campaign;
    for (std::size_t h = 0; h < horizons.size(); ++h) {
        HorizonReport hr;
        hr.n = horizons[h];
        std::map<std::string, std::vector<double>> columns;
        for (std::size_t r = 0; r < R; ++r) {
            for (const auto& [name, v] : replica_estimators(results[r][h])) {
                columns[name].push_back(v);
            }
        }
        for (const auto& [name, vs] : columns) {
            hr.estimates[name] = summarize(vs);
        }
        report.horizons.push_back(std::move(hr));
    }
    const double threshold = std::pow(static_cast<double>(campaign.n), 0.55);
    for (std::size_t r = 0; r < R; ++r) {
        const RunStats& last = results[r].back();
        report.merged = r == 0 ? last : merge(report.merged, last);
        report.replica_values.push_back(replica_estimators(last));
        report.replica_large_entries.push_back(count_large_entries(last, threshold));
    }
    return report;
}

namespace {

EmpiricalMeasure histogram_measure(const std::map<LatticePoint, std::uint64_t>& h) {
    EmpiricalMeasure m;
    for (const auto& [site, count] : h) {
        m.add(site, static_cast<double>(count));
    }
    return m;
}

std::map<std::int64_t, double> shell_counts(const std::map<LatticePoint, std::uint64_t>& h) {
    std::map<std::int64_t, double> out;
    for (const auto& [site, count] : h) {
        out[max_norm(site)] += static_cast<double>(count);
    }
    return out;
}

} // namespace

EmpiricalInvariants empirical_invariants(const EstimateReport& report, const SlopeBands& bands) {
    if (report.merged.excursions < 10000) {
        throw PreconditionError("empirical invariants need at least 1e4 excursions, got " +
                                std::to_string(report.merged.excursions));
    }
    EmpiricalInvariants out;
    out.entry = histogram_measure(report.merged.entry_histogram).normalized();
    out.exit = histogram_measure(report.merged.exit_histogram).normalized();
    const auto entry_counts = shell_counts(report.merged.entry_histogram);
    const auto exit_counts = shell_counts(report.merged.exit_histogram);
    out.entry_slope = fit_tail_slope(out.entry, ShellGeometry::Axis, bands.entry_lo, bands.entry_hi, &entry_counts,
                                     bands.min_shell_count);
    out.exit_slope = fit_tail_slope(out.exit, ShellGeometry::ConeBoundary, bands.exit_lo, bands.exit_hi,
                                    &exit_counts, bands.min_shell_count);
    return out;
}

ConeTimeCheck cone_time_check(const EstimateReport& report, double mean_exit_norm) {
    ConeTimeCheck c;
    const Estimate& e = report.final_horizon().estimates.at("cone_time");
    c.empirical = e.mean;
    c.std_error = e.std_error;
    c.target = (8.0 / std::numbers::pi) * mean_exit_norm;
    c.ratio = c.empirical / c.target;
    return c;
}

MomentCheck moment_check(const EstimateReport& report) {
    MomentCheck mc;
    const RunStats& s = report.merged;
    const std::size_t buckets = s.entry_moment_buckets.size();
    double best = 0.0;
    for (std::size_t b = 0; b < buckets; ++b) {
        if (s.entry_bucket_counts[b] == 0) {
            continue;
        }
        best = std::max(best, s.entry_moment_buckets[b] / static_cast<double>(s.entry_bucket_counts[b]));
        mc.running_max.push_back(best);
    }
    if (buckets >= 10) {
        double lo = INFINITY;
        double hi = 0.0;
        for (std::size_t d = 0; d < 10; ++d) {
            const std::size_t from = d * buckets / 10;
            const std::size_t to = (d + 1) * buckets / 10;
            double sum = 0.0;
            double cnt = 0.0;
            for (std::size_t b = from; b < to; ++b) {
                sum += s.entry_moment_buckets[b];
                cnt += static_cast<double>(s.entry_bucket_counts[b]);
            }
            const double mean = cnt > 0.0 ? sum / cnt : 0.0;
            mc.decile_means.push_back(mean);
            lo = std::min(lo, mean);
            hi = std::max(hi, mean);
        }
        mc.decile_spread = lo > 0.0 ? hi / lo : INFINITY;
    }
    mc.threshold = std::pow(static_cast<double>(report.campaign.n), 0.55);
    std::size_t clean = 0;
    for (const auto c : report.replica_large_entries) {
        clean += c == 0 ? 1 : 0;
    }
    mc.fraction_clean_replicas =
        report.replica_large_entries.empty()
            ? 0.0
            : static_cast<double>(clean) / static_cast<double>(report.replica_large_entries.size());
    mc.beta1_mean = s.entries > 0 ? s.entry_norm_sum / static_cast<double>(s.entries) : 0.0;
    if (!s.entry_histogram.empty()) {
        const EmpiricalMeasure m = histogram_measure(s.entry_histogram).normalized();
        mc.beta1_histogram_mean = m.expectation([](LatticePoint p) { return static_cast<double>(max_norm(p)); });
    }
    mc.beta1_stderr = report.final_horizon().estimates.at("entry_norm_mean").std_error;
    return mc;
}

ChiSquareResult duration_chi_square(const EstimateReport& report, std::int64_t max_r) {
    const RunStats& s = report.merged;
    if (s.excursions == 0) {
        throw PreconditionError("no completed excursions");
    }
    const WalkParams params(report.campaign.alpha);
    std::int64_t reach = 0;
    for (const auto& [site, count] : s.entry_histogram) {
        reach = std::max(reach, max_norm(site));
    }
    // Killing is then reachable only after more than max_r steps.
    const std::int64_t R = reach + max_r + 2;
    const AxisChain chain(params, R);
    std::vector<double> cur(chain.size(), 0.0);
    double total = 0.0;
    for (const auto& [site, count] : s.entry_histogram) {
        cur[chain.index_of(site)] += static_cast<double>(count);
        total += static_cast<double>(count);
    }
    for (double& v : cur) {
        v /= total;
    }
    // Evolve the substochastic axis kernel; mass leaving to the cone at step r is P(rho = r).
    std::vector<double> law(static_cast<std::size_t>(max_r) + 1, 0.0);
    for (std::int64_t r = 1; r <= max_r; ++r) {
        std::vector<double> nxt(chain.size(), 0.0);
        double exited = 0.0;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            if (cur[k] == 0.0) {
                continue;
            }
            const LatticePoint p = chain.site_of(k);
            for (const Outcome& o : transition_distribution(p, params)) {
                if (in_cone(o.site)) {
                    exited += cur[k] * o.probability;
                } else if (chain.contains(o.site)) {
                    nxt[chain.index_of(o.site)] += cur[k] * o.probability;
                }
            }
        }
        law[static_cast<std::size_t>(r)] = exited;
        cur = std::move(nxt);
    }
    ChiSquareResult out;
    const double n = static_cast<double>(s.excursions);
    double observed_head = 0.0;
    double expected_head = 0.0;
    for (std::int64_t r = 1; r <= max_r; ++r) {
        const auto it = s.duration_histogram.find(static_cast<std::uint64_t>(r));
        const double o = it == s.duration_histogram.end() ? 0.0 : static_cast<double>(it->second);
        out.observed.push_back(o);
        out.expected.push_back(n * law[static_cast<std::size_t>(r)]);
        observed_head += o;
        expected_head += n * law[static_cast<std::size_t>(r)];
    }
    out.observed.push_back(n - observed_head);
    out.expected.push_back(n - expected_head);
    std::size_t bins = 0;
    for (std::size_t i = 0; i < out.observed.size(); ++i) {
        if (out.expected[i] <= 0.0) {
            continue;
        }
        const double d = out.observed[i] - out.expected[i];
        out.statistic += d * d / out.expected[i];
        ++bins;
    }
    out.dof = bins > 1 ? bins - 1 : 1;
    const boost::math::chi_squared dist(static_cast<double>(out.dof));
    out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
    return out;
}

} // namespace axiswalk
