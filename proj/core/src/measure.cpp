#include "axiswalk/measure.hpp"

#include <cmath>

namespace axiswalk {

EmpiricalMeasure::EmpiricalMeasure(Map mass, double deficit) : mass_(std::move(mass)), deficit_(deficit) {}

void EmpiricalMeasure::add(LatticePoint p, double m) {
    if (m != 0.0) {
        mass_[p] += m;
    }
}

double EmpiricalMeasure::mass_of(LatticePoint p) const {
    const auto it = mass_.find(p);
    return it == mass_.end() ? 0.0 : it->second;
}

double EmpiricalMeasure::total() const {
    double t = 0.0;
    for (const auto& [p, m] : mass_) {
        t += m;
    }
    return t;
}

EmpiricalMeasure EmpiricalMeasure::normalized() const {
    const double t = total();
    if (!(t > 0.0)) {
        throw PreconditionError("cannot normalize a measure with zero mass");
    }
    Map scaled;
    for (const auto& [p, m] : mass_) {
        scaled.emplace_hint(scaled.end(), p, m / t);
    }
    return EmpiricalMeasure(std::move(scaled), 0.0);
}

double EmpiricalMeasure::expectation(const std::function<double(LatticePoint)>& f) const {
    double acc = 0.0;
    for (const auto& [p, m] : mass_) {
        acc += m * f(p);
    }
    return acc;
}

std::map<std::int64_t, double> shell_masses(const EmpiricalMeasure& m) {
    std::map<std::int64_t, double> shells;
    for (const auto& [p, mass] : m.support()) {
        shells[max_norm(p)] += mass;
    }
    return shells;
}

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) {
        throw PreconditionError("least_squares needs at least two points");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw PreconditionError("least_squares needs two distinct abscissae");
    }
    LinearFit fit;
    fit.points = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (n > 2) {
        double rss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] - fit.intercept - fit.slope * x[i];
            rss += r * r;
        }
        fit.slope_stderr = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
    }
    return fit;
}

std::int64_t shell_size(ShellGeometry g, std::int64_t r) {
    if (g == ShellGeometry::Axis) {
        return 4;
    }
    return r == 1 ? 4 : 8;
}

LinearFit fit_tail_slope(const EmpiricalMeasure& m, ShellGeometry g, std::int64_t lo, std::int64_t hi,
                         const std::map<std::int64_t, double>* counts, double min_count) {
    const auto shells = shell_masses(m);
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::int64_t r = lo; r <= hi; ++r) {
        const auto it = shells.find(r);
        if (it == shells.end() || !(it->second > 0.0)) {
            continue;
        }
        if (counts != nullptr) {
            const auto c = counts->find(r);
            if (c == counts->end() || c->second < min_count) {
                continue;
            }
        }
        xs.push_back(std::log(static_cast<double>(r)));
        ys.push_back(std::log(it->second / static_cast<double>(shell_size(g, r))));
    }
    return least_squares(xs, ys);
}

} // namespace axiswalk
