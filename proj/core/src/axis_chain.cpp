#include "axiswalk/axis_chain.hpp"

#include <cmath>

namespace axiswalk {

namespace {

constexpr Arm kArms[4] = {Arm::PlusX1, Arm::MinusX1, Arm::PlusX2, Arm::MinusX2};

void require_axis(LatticePoint p, const char* what) {
    if (!on_axis(p)) {
        throw PreconditionError(std::string(what) + " must lie on the axes, got " + to_string(p));
    }
}

} // namespace

AxisChain::AxisChain(const WalkParams& params, std::int64_t R) : params_(params), R_(R) {
    if (R < 2) {
        throw PreconditionError("truncation radius R must be >= 2");
    }
    const auto n = static_cast<std::size_t>(R);
    q_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        q_[i] = params_.outward_probability(static_cast<std::int64_t>(i));
    }
    // Levels are indexed 1..R-1; slot 0 unused.
    forward_.lower.assign(n, 0.0);
    forward_.upper.assign(n, 0.0);
    transposed_.lower.assign(n, 0.0);
    transposed_.upper.assign(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        forward_.lower[i] = 1.0 - 3.0 * q_[i];
        forward_.upper[i] = i + 1 < n ? q_[i] : 0.0;
        transposed_.lower[i] = i == 1 ? 0.25 : q_[i - 1];
        transposed_.upper[i] = i + 1 < n ? 1.0 - 3.0 * q_[i + 1] : 0.0;
    }
    forward_.origin_coupling = 0.25;
    transposed_.origin_coupling = 1.0 - 3.0 * q_[1];
}

bool AxisChain::contains(LatticePoint p) const { return on_axis(p) && max_norm(p) < R_; }

std::size_t AxisChain::index_of(LatticePoint p) const {
    if (!contains(p)) {
        throw PreconditionError("site " + to_string(p) + " is not a state of the truncated axis chain");
    }
    const RegionKind r = classify(p);
    if (r.kind == RegionKind::Kind::Origin) {
        return 0;
    }
    return static_cast<std::size_t>(1 + static_cast<std::int64_t>(r.arm) * (R_ - 1) + (r.level - 1));
}

LatticePoint AxisChain::site_of(std::size_t index) const {
    if (index == 0) {
        return {0, 0};
    }
    const auto k = static_cast<std::int64_t>(index) - 1;
    return arm_site(kArms[k / (R_ - 1)], 1 + k % (R_ - 1));
}

double AxisChain::killing_probability(std::size_t index) const {
    if (index == 0) {
        return 0.0;
    }
    const auto level = max_norm(site_of(index));
    return level == R_ - 1 ? q_[static_cast<std::size_t>(level)] : 0.0;
}

std::vector<double> AxisChain::solve_tree(const Tridiagonal& m, const std::vector<double>& b) const {
    if (b.size() != size()) {
        throw PreconditionError("right-hand side has the wrong dimension");
    }
    const auto L = static_cast<std::size_t>(R_ - 1);
    std::vector<double> alpha(size(), 0.0);
    std::vector<double> beta(size(), 0.0);
    double origin_diag = 1.0;
    double origin_rhs = b[0];
    for (std::size_t a = 0; a < 4; ++a) {
        const std::size_t base = 1 + a * L;
        double next_alpha = 0.0;
        double next_beta = 0.0;
        for (std::size_t i = L; i >= 1; --i) {
            const std::size_t k = base + i - 1;
            const double denom = 1.0 - m.upper[i] * next_alpha;
            alpha[k] = m.lower[i] / denom;
            beta[k] = (b[k] + m.upper[i] * next_beta) / denom;
            next_alpha = alpha[k];
            next_beta = beta[k];
        }
        origin_diag -= m.origin_coupling * alpha[base];
        origin_rhs += m.origin_coupling * beta[base];
    }
    std::vector<double> u(size(), 0.0);
    u[0] = origin_rhs / origin_diag;
    for (std::size_t a = 0; a < 4; ++a) {
        const std::size_t base = 1 + a * L;
        double parent = u[0];
        for (std::size_t i = 1; i <= L; ++i) {
            const std::size_t k = base + i - 1;
            u[k] = alpha[k] * parent + beta[k];
            parent = u[k];
        }
    }
    return u;
}

std::vector<double> AxisChain::solve(const std::vector<double>& b) const { return solve_tree(forward_, b); }

std::vector<double> AxisChain::solve_transpose(const std::vector<double>& b) const {
    return solve_tree(transposed_, b);
}

std::vector<double> AxisChain::expected_time() const { return solve(std::vector<double>(size(), 1.0)); }

std::vector<double> AxisChain::green_row(LatticePoint x) const {
    std::vector<double> e(size(), 0.0);
    e[index_of(x)] = 1.0;
    return solve_transpose(e);
}

std::vector<double> AxisChain::origin_visits() const {
    std::vector<double> e(size(), 0.0);
    e[0] = 1.0;
    return solve(e);
}

EmpiricalMeasure absorption_law(const AxisChain& chain, LatticePoint start) {
    const std::vector<double> g = chain.green_row(start);
    EmpiricalMeasure law;
    double killed = 0.0;
    for (std::size_t k = 1; k < g.size(); ++k) {
        const LatticePoint s = chain.site_of(k);
        const double q = chain.outward(max_norm(s));
        const LatticePoint side = s.x2 == 0 ? LatticePoint{0, 1} : LatticePoint{1, 0};
        law.add(s + side, g[k] * q);
        law.add(LatticePoint{s.x1 - side.x1, s.x2 - side.x2}, g[k] * q);
        killed += g[k] * chain.killing_probability(k);
    }
    law.set_deficit(killed);
    return law;
}

AxisSolveResult axis_absorption(LatticePoint start, const WalkParams& params, std::int64_t R, std::int64_t M) {
    require_axis(start, "start");
    if (R < 2) {
        throw PreconditionError("truncation radius R must be >= 2");
    }
    if (max_norm(start) >= R) {
        throw PreconditionError("start must satisfy max_norm < R");
    }
    if (M < 0) {
        throw PreconditionError("survival horizon M must be >= 0");
    }
    const AxisChain chain(params, R);
    const std::size_t x = chain.index_of(start);
    const std::vector<double> g = chain.green_row(start);
    const std::vector<double> t = chain.expected_time();

    AxisSolveResult out;
    out.absorption_law = absorption_law(chain, start);
    out.expected_rho = t[x];
    double gt = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        gt += g[k] * t[k];
    }
    out.expected_rho_sq = 2.0 * gt - t[x];
    out.origin_visits = g[0];

    // Survival: alive mass on the axes plus mass already killed (rho is then
    // unobserved and counted as not yet happened).
    const auto L = static_cast<std::size_t>(R - 1);
    std::vector<double> cur(chain.size(), 0.0);
    std::vector<double> nxt(chain.size(), 0.0);
    cur[x] = 1.0;
    double killed = 0.0;
    out.survival.reserve(static_cast<std::size_t>(M) + 1);
    out.survival.push_back(1.0);
    for (std::int64_t m = 1; m <= M; ++m) {
        std::fill(nxt.begin(), nxt.end(), 0.0);
        for (std::size_t a = 0; a < 4; ++a) {
            const std::size_t base = 1 + a * L;
            nxt[base] += 0.25 * cur[0];
            for (std::size_t i = 1; i <= L; ++i) {
                const std::size_t k = base + i - 1;
                const double mass = cur[k];
                if (mass == 0.0) {
                    continue;
                }
                const double q = chain.outward(static_cast<std::int64_t>(i));
                nxt[i == 1 ? 0 : k - 1] += mass * (1.0 - 3.0 * q);
                if (i < L) {
                    nxt[k + 1] += mass * q;
                } else {
                    killed += mass * q;
                }
            }
        }
        std::swap(cur, nxt);
        double alive = 0.0;
        for (const double v : cur) {
            alive += v;
        }
        out.survival.push_back(alive + killed);
    }
    return out;
}

namespace {

/// Signed steps along the shortest axis path from x to y, via the origin when
/// the arms differ. Calls visit(site, next) for every move.
template <typename Visit>
void walk_axis_path(LatticePoint x, LatticePoint y, Visit visit) {
    const RegionKind rx = classify(x);
    const RegionKind ry = classify(y);
    const bool same_ray = rx.kind == RegionKind::Kind::Origin || ry.kind == RegionKind::Kind::Origin
                              ? false
                              : rx.arm == ry.arm;
    LatticePoint cur = x;
    auto move_to = [&](LatticePoint target) {
        while (cur != target) {
            LatticePoint next = cur;
            if (cur.x1 != target.x1) {
                next.x1 += cur.x1 < target.x1 ? 1 : -1;
            } else {
                next.x2 += cur.x2 < target.x2 ? 1 : -1;
            }
            visit(cur, next);
            cur = next;
        }
    };
    if (!same_ray && cur != LatticePoint{0, 0}) {
        move_to({0, 0});
    }
    move_to(y);
}

} // namespace

double log_shortest_path_prob(LatticePoint x, LatticePoint y, const WalkParams& params) {
    require_axis(x, "x");
    require_axis(y, "y");
    double logp = 0.0;
    walk_axis_path(x, y, [&](LatticePoint from, LatticePoint to) {
        logp += std::log(transition_distribution(from, params).probability_of(to));
    });
    return logp;
}

double shortest_path_prob(LatticePoint x, LatticePoint y, const WalkParams& params) {
    return std::exp(log_shortest_path_prob(x, y, params));
}

LatticePoint cone_side_neighbour(LatticePoint axis_site) {
    require_axis(axis_site, "site");
    if (axis_site == LatticePoint{0, 0}) {
        throw PreconditionError("the origin has no cone-side neighbour");
    }
    return axis_site.x2 == 0 ? axis_site + LatticePoint{0, 1} : axis_site + LatticePoint{1, 0};
}

double reversibility_residual(LatticePoint x, LatticePoint y, const WalkParams& params, std::int64_t R) {
    if (x == y) {
        return 0.0;
    }
    const AxisChain chain(params, R);
    if (!chain.contains(x) || !chain.contains(y) || x == LatticePoint{0, 0} || y == LatticePoint{0, 0}) {
        throw PreconditionError("reversibility_residual needs non-origin axis sites inside the radius");
    }
    // Probability of leaving the axes through the edge y -> y+e. At level 1 the
    // site y+e is also adjacent to another arm, so the edge, not the site, is
    // the quantity the identity relates.
    const double lhs = chain.green_row(x)[chain.index_of(y)] * chain.outward(max_norm(y));
    const double back = chain.green_row(y)[chain.index_of(x)] * chain.outward(max_norm(x));
    const double log_ratio = log_shortest_path_prob(x, y, params) - log_shortest_path_prob(y, x, params) +
                             params.alpha() * (std::log(static_cast<double>(max_norm(x))) -
                                               std::log(static_cast<double>(max_norm(y))));
    return std::abs(lhs - std::exp(log_ratio) * back);
}

} // namespace axiswalk
