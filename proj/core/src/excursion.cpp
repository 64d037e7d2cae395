#include "axiswalk/excursion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace axiswalk {

namespace {

template <typename Map>
void add_into(Map& dst, const Map& src) {
    for (const auto& [k, v] : src) {
        dst[k] += v;
    }
}

template <typename T>
void add_vectors(std::vector<T>& dst, const std::vector<T>& src) {
    if (dst.size() < src.size()) {
        dst.resize(src.size(), T{});
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] += src[i];
    }
}

} // namespace

RunStats merge(const RunStats& a, const RunStats& b) {
    RunStats out = a;
    out.n += b.n;
    out.excursions += b.excursions;
    out.entries += b.entries;
    out.local_time_axis += b.local_time_axis;
    out.local_time_origin += b.local_time_origin;
    out.local_time_cone += b.local_time_cone;
    out.cone_time_completed += b.cone_time_completed;
    out.axis_time_completed += b.axis_time_completed;
    out.tail_axis_time += b.tail_axis_time;
    out.max_entry_norm = std::max(a.max_entry_norm, b.max_entry_norm);
    out.entry_norm_sum += b.entry_norm_sum;
    if (out.functionals.empty()) {
        out.functionals = b.functionals;
    } else if (!b.functionals.empty()) {
        if (out.functionals.size() != b.functionals.size()) {
            throw PreconditionError("cannot merge runs tracking different functionals");
        }
        for (std::size_t i = 0; i < out.functionals.size(); ++i) {
            if (out.functionals[i].id != b.functionals[i].id) {
                throw PreconditionError("cannot merge runs tracking different functionals");
            }
            out.functionals[i].sum += b.functionals[i].sum;
            out.functionals[i].tail += b.functionals[i].tail;
        }
    }
    add_into(out.entry_histogram, b.entry_histogram);
    add_into(out.exit_histogram, b.exit_histogram);
    add_into(out.duration_histogram, b.duration_histogram);
    add_vectors(out.entry_moment_buckets, b.entry_moment_buckets);
    add_vectors(out.entry_bucket_counts, b.entry_bucket_counts);
    return out;
}

Walker::Walker(const WalkParams& params, std::uint64_t seed, std::uint64_t stream, FunctionalList functionals)
    : params_(params), rng_(seed, stream), functionals_(std::move(functionals)) {
    for (const auto& f : functionals_) {
        acc_.functionals.push_back({f->id(), 0.0, 0.0});
    }
    q_.push_back(0.25); // level 0 is unused
}

Walker::Walker(const Walker& other)
    : params_(other.params_), rng_(other.rng_), functionals_(clone_functionals(other.functionals_)),
      observer_(other.observer_), q_(other.q_), pos_(other.pos_), time_(other.time_),
      in_axis_phase_(other.in_axis_phase_), last_rho_(other.last_rho_), current_eta_(other.current_eta_),
      current_entry_(other.current_entry_), acc_(other.acc_) {}

Walker& Walker::operator=(const Walker& other) {
    if (this != &other) {
        Walker copy(other);
        *this = std::move(copy);
    }
    return *this;
}

double Walker::outward(std::int64_t level) {
    if (level >= static_cast<std::int64_t>(q_.size())) {
        const auto old = static_cast<std::int64_t>(q_.size());
        q_.resize(static_cast<std::size_t>(std::max<std::int64_t>(level + 1, 2 * old)));
        for (auto i = old; i < static_cast<std::int64_t>(q_.size()); ++i) {
            q_[static_cast<std::size_t>(i)] = params_.outward_probability(i);
        }
    }
    return q_[static_cast<std::size_t>(level)];
}

void Walker::on_enter_axis() {
    in_axis_phase_ = true;
    current_eta_ = time_;
    current_entry_ = pos_;
    const std::int64_t norm = max_norm(pos_);
    acc_.entries += 1;
    acc_.max_entry_norm = std::max(acc_.max_entry_norm, norm);
    acc_.entry_norm_sum += static_cast<double>(norm);
    acc_.entry_histogram[pos_] += 1;
    const std::size_t bucket = static_cast<std::size_t>((acc_.entries - 1) / kEntryBucket);
    if (acc_.entry_moment_buckets.size() <= bucket) {
        acc_.entry_moment_buckets.resize(bucket + 1, 0.0);
        acc_.entry_bucket_counts.resize(bucket + 1, 0);
    }
    acc_.entry_moment_buckets[bucket] += std::pow(static_cast<double>(norm), kEntryMomentBeta);
    acc_.entry_bucket_counts[bucket] += 1;
    for (auto& f : functionals_) {
        f->reset();
    }
}

void Walker::on_enter_cone() {
    in_axis_phase_ = false;
    if (min_abs(pos_) != 1 || current_eta_ >= time_) {
        throw std::logic_error("excursion bracketing violated at time " + std::to_string(time_));
    }
    acc_.excursions += 1;
    acc_.cone_time_completed += current_eta_ - last_rho_;
    acc_.axis_time_completed += time_ - current_eta_;
    acc_.duration_histogram[time_ - current_eta_] += 1;
    acc_.exit_histogram[pos_] += 1;
    ExcursionRecord rec;
    const bool want_record = static_cast<bool>(observer_);
    if (want_record) {
        rec.index = acc_.excursions;
        rec.eta = current_eta_;
        rec.rho = time_;
        rec.entry_site = current_entry_;
        rec.exit_site = pos_;
    }
    for (std::size_t i = 0; i < functionals_.size(); ++i) {
        const double v = functionals_[i]->value();
        acc_.functionals[i].sum += v;
        if (want_record) {
            rec.functional_values.push_back(v);
        }
    }
    last_rho_ = time_;
    if (want_record) {
        observer_(rec);
    }
}

void Walker::advance_to(std::uint64_t n) {
    while (time_ < n) {
        const double u = rng_.uniform();
        LatticePoint next = pos_;
        if ((pos_.x1 != 0) == (pos_.x2 != 0)) {
            if (u < 0.25) {
                next.x1 += 1;
            } else if (u < 0.5) {
                next.x1 -= 1;
            } else if (u < 0.75) {
                next.x2 += 1;
            } else {
                next.x2 -= 1;
            }
        } else {
            // Axis site: the three non-inward moves in (+x1,-x1,+x2,-x2) order, then inward.
            const bool on_x1 = pos_.x2 == 0;
            const std::int64_t coord = on_x1 ? pos_.x1 : pos_.x2;
            const std::int64_t level = coord < 0 ? -coord : coord;
            const double q = outward(level);
            const std::int64_t out = coord > 0 ? 1 : -1;
            const int bucket = u < q ? 0 : (u < 2 * q ? 1 : (u < 3 * q ? 2 : 3));
            if (bucket == 3) {
                (on_x1 ? next.x1 : next.x2) -= out;
            } else if (on_x1) {
                // (+x1 or -x1 outward), +x2, -x2
                constexpr LatticePoint side[2] = {{0, 1}, {0, -1}};
                next = bucket == 0 ? next + LatticePoint{out, 0} : next + side[bucket - 1];
            } else {
                // +x1, -x1, (+x2 or -x2 outward)
                constexpr LatticePoint side[2] = {{1, 0}, {-1, 0}};
                next = bucket == 2 ? next + LatticePoint{0, out} : next + side[bucket];
            }
        }
        pos_ = next;
        ++time_;
        const bool axis = pos_.x1 == 0 || pos_.x2 == 0;
        if (axis) {
            acc_.local_time_axis += 1;
            if (pos_.x1 == 0 && pos_.x2 == 0) {
                acc_.local_time_origin += 1;
            }
            if (!in_axis_phase_) {
                on_enter_axis();
            }
            for (auto& f : functionals_) {
                f->push(pos_);
            }
        } else {
            acc_.local_time_cone += 1;
            if (in_axis_phase_) {
                on_enter_cone();
            }
        }
        if (max_norm(pos_) > kMaxSiteNorm) {
            throw std::runtime_error("walk left the supported region (max norm > 1e6) at time " +
                                     std::to_string(time_) + "; check alpha");
        }
    }
}

RunStats Walker::stats() const {
    RunStats s = acc_;
    s.n = time_;
    if (in_axis_phase_) {
        s.tail_axis_time = time_ - current_eta_ + 1;
        for (std::size_t i = 0; i < functionals_.size(); ++i) {
            s.functionals[i].tail = functionals_[i]->value();
        }
    }
    return s;
}

RunStats run_walk(const WalkParams& params, std::uint64_t n, std::uint64_t seed, const FunctionalList& functionals,
                  std::uint64_t stream) {
    if (n < 1) {
        throw PreconditionError("run_walk requires n >= 1");
    }
    Walker w(params, seed, stream, clone_functionals(functionals));
    w.advance_to(n);
    return w.stats();
}

std::vector<RunStats> run_walk_checkpoints(const WalkParams& params, const std::vector<std::uint64_t>& horizons,
                                           std::uint64_t seed, const FunctionalList& functionals,
                                           std::uint64_t stream) {
    if (horizons.empty() || horizons.front() < 1 || !std::is_sorted(horizons.begin(), horizons.end())) {
        throw PreconditionError("horizons must be non-empty, increasing and >= 1");
    }
    Walker w(params, seed, stream, clone_functionals(functionals));
    std::vector<RunStats> out;
    out.reserve(horizons.size());
    for (const auto h : horizons) {
        w.advance_to(h);
        out.push_back(w.stats());
    }
    return out;
}

std::map<std::string, double> theorem_estimates(const RunStats& stats) {
    if (stats.n < 2) {
        throw PreconditionError("theorem_estimates requires n >= 2");
    }
    const double n = static_cast<double>(stats.n);
    const double scale = std::log(n) / n;
    std::map<std::string, double> out;
    out["axis_local_time"] = scale * static_cast<double>(stats.local_time_axis);
    out["origin_local_time"] = scale * static_cast<double>(stats.local_time_origin);
    out["excursion_rate"] = scale * static_cast<double>(stats.excursions);
    for (const auto& f : stats.functionals) {
        out["functional:" + f.id] = scale * (f.sum + f.tail);
    }
    return out;
}

} // namespace axiswalk
