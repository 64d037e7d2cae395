#include "axiswalk/cone.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace axiswalk {

ConeExitResult cone_exit(LatticePoint start, std::int64_t R, std::int64_t T) {
    if (!in_cone(start)) {
        throw PreconditionError("cone_exit start must lie in the cone, got " + to_string(start));
    }
    if (max_norm(start) >= R) {
        throw PreconditionError("cone_exit start must satisfy max_norm < R");
    }
    if (T < 0) {
        throw PreconditionError("time horizon T must be >= 0");
    }
    const std::int64_t s1 = start.x1 > 0 ? 1 : -1;
    const std::int64_t s2 = start.x2 > 0 ? 1 : -1;
    const std::int64_t a0 = start.x1 * s1;
    const std::int64_t b0 = start.x2 * s2;

    // Grid with a zero frame: rows/cols 0 and R are never written.
    const auto W = static_cast<std::size_t>(R + 1);
    std::vector<double> cur(W * W, 0.0);
    std::vector<double> nxt(W * W, 0.0);
    cur[static_cast<std::size_t>(a0) * W + static_cast<std::size_t>(b0)] = 1.0;

    std::vector<double> hit_x2_axis(W, 0.0); // (0, b)
    std::vector<double> hit_x1_axis(W, 0.0); // (a, 0)
    ConeExitResult out;
    out.time_law.assign(static_cast<std::size_t>(T) + 1, 0.0);

    for (std::int64_t t = 1; t <= T; ++t) {
        const auto amax = static_cast<std::size_t>(std::min(R - 1, a0 + t - 1));
        const auto bmax = static_cast<std::size_t>(std::min(R - 1, b0 + t - 1));
        double absorbed = 0.0;
        for (std::size_t b = 1; b <= bmax; ++b) {
            const double m = 0.25 * cur[W + b];
            hit_x2_axis[b] += m;
            absorbed += m;
        }
        for (std::size_t a = 1; a <= amax; ++a) {
            const double m = 0.25 * cur[a * W + 1];
            hit_x1_axis[a] += m;
            absorbed += m;
        }
        if (amax == static_cast<std::size_t>(R - 1)) {
            for (std::size_t b = 1; b <= bmax; ++b) {
                out.escaped += 0.25 * cur[amax * W + b];
            }
        }
        if (bmax == static_cast<std::size_t>(R - 1)) {
            for (std::size_t a = 1; a <= amax; ++a) {
                out.escaped += 0.25 * cur[a * W + bmax];
            }
        }
        out.time_law[static_cast<std::size_t>(t)] = absorbed;

        const std::size_t anew = std::min<std::size_t>(amax + 1, W - 2);
        const std::size_t bnew = std::min<std::size_t>(bmax + 1, W - 2);
        for (std::size_t a = 1; a <= anew; ++a) {
            const double* up = &cur[(a - 1) * W];
            const double* mid = &cur[a * W];
            const double* down = &cur[(a + 1) * W];
            double* dst = &nxt[a * W];
            for (std::size_t b = 1; b <= bnew; ++b) {
                dst[b] = 0.25 * (up[b] + down[b] + mid[b - 1] + mid[b + 1]);
            }
        }
        std::swap(cur, nxt);
    }
    for (const double v : cur) {
        out.alive += v;
    }
    for (std::size_t j = 1; j < W - 1; ++j) {
        const auto k = static_cast<std::int64_t>(j);
        out.exit_law.add({0, s2 * k}, hit_x2_axis[j]);
        out.exit_law.add({s1 * k, 0}, hit_x1_axis[j]);
    }
    out.exit_law.set_deficit(out.alive + out.escaped);
    return out;
}

QuadrantGreen::QuadrantGreen(std::int64_t R) : R_(R) {
    if (R < 2) {
        throw PreconditionError("QuadrantGreen requires R >= 2");
    }
    const auto n = static_cast<Eigen::Index>(R - 1);
    const double scale = std::sqrt(2.0 / static_cast<double>(R));
    Eigen::MatrixXd phi(n, n); // phi(i-1, a-1) = sqrt(2/R) sin(pi a i / R)
    Eigen::VectorXd cosines(n);
    for (Eigen::Index a = 0; a < n; ++a) {
        const double theta = std::numbers::pi * static_cast<double>(a + 1) / static_cast<double>(R);
        cosines(a) = std::cos(theta);
        for (Eigen::Index i = 0; i < n; ++i) {
            phi(i, a) = scale * std::sin(theta * static_cast<double>(i + 1));
        }
    }
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd weights(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            const double inv_gap = 1.0 / (1.0 - 0.5 * (cosines(a) + cosines(b)));
            diag(b) += phi(0, a) * phi(0, a) * inv_gap;
            weights(b, a) = phi(0, b) * phi(0, a) * inv_gap;
        }
    }
    const Eigen::MatrixXd same = phi * diag.asDiagonal() * phi.transpose();
    const Eigen::MatrixXd cross = phi * weights * phi.transpose();
    same_side_.resize(static_cast<std::size_t>(n * n));
    cross_side_.resize(static_cast<std::size_t>(n * n));
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index j = 0; j < n; ++j) {
            same_side_[static_cast<std::size_t>(u * n + j)] = same(u, j);
            cross_side_[static_cast<std::size_t>(u * n + j)] = cross(u, j);
        }
    }
}

double QuadrantGreen::exit_probability(LatticePoint w, LatticePoint z) const {
    const std::int64_t n = R_ - 1;
    if (w.x1 < 1 || w.x2 < 1 || (w.x1 != 1 && w.x2 != 1) || max_norm(w) > n) {
        throw PreconditionError("w must be a boundary site of the positive quadrant inside the box");
    }
    if ((z.x1 != 0 && z.x2 != 0) || z.x1 < 0 || z.x2 < 0 || max_norm(z) < 1 || max_norm(z) > n) {
        throw PreconditionError("z must be a positive axis site inside the box");
    }
    // Reduce to w = (1, u) by the coordinate swap.
    const bool swap = w.x1 != 1;
    const std::int64_t u = swap ? w.x1 : w.x2;
    const bool z_on_x2 = z.x1 == 0;
    const std::int64_t j = max_norm(z);
    const bool same = z_on_x2 != swap;
    const auto k = static_cast<std::size_t>((u - 1) * n + (j - 1));
    return 0.25 * (same ? same_side_[k] : cross_side_[k]);
}

double reverse_sum(LatticePoint x, std::int64_t R, std::int64_t T) {
    if (!on_axis(x)) {
        throw PreconditionError("reverse_sum target must lie on the axes");
    }
    if (R < 1 || T < 0) {
        throw PreconditionError("reverse_sum requires R >= 1 and T >= 0");
    }
    if (x == LatticePoint{0, 0}) {
        return 0.0; // the origin has no cone neighbour
    }
    const std::int64_t i = max_norm(x);
    if (i > R) {
        return 0.0;
    }
    // By symmetry take x = (0, i); the two adjacent quadrants contribute equally.
    // h(a, b) = P_{(a,b)}(X_eta = (0,i), eta <= t), alive cells 1..R.
    const auto W = static_cast<std::size_t>(R + 2);
    std::vector<double> cur(W * W, 0.0);
    std::vector<double> nxt(W * W, 0.0);
    const auto target_b = static_cast<std::size_t>(i);
    for (std::int64_t t = 1; t <= T; ++t) {
        const auto amax = static_cast<std::size_t>(std::min<std::int64_t>(R, t));
        const auto blo = static_cast<std::size_t>(std::max<std::int64_t>(1, i - t + 1));
        const auto bhi = static_cast<std::size_t>(std::min<std::int64_t>(R, i + t - 1));
        for (std::size_t a = 1; a <= amax; ++a) {
            const double* up = &cur[(a - 1) * W];
            const double* mid = &cur[a * W];
            const double* down = &cur[(a + 1) * W];
            double* dst = &nxt[a * W];
            for (std::size_t b = blo; b <= bhi; ++b) {
                dst[b] = 0.25 * (up[b] + down[b] + mid[b - 1] + mid[b + 1]);
            }
        }
        nxt[W + target_b] += 0.25;
        std::swap(cur, nxt);
    }
    double sum = 0.0;
    for (std::size_t b = 1; b <= static_cast<std::size_t>(R); ++b) {
        sum += cur[W + b];
    }
    for (std::size_t a = 2; a <= static_cast<std::size_t>(R); ++a) {
        sum += cur[a * W + 1];
    }
    return 2.0 * sum;
}

ReverseSumEstimate reverse_sum_extrapolated(LatticePoint x, std::int64_t R, std::int64_t T) {
    if (R < 4) {
        throw PreconditionError("extrapolation needs R >= 4");
    }
    ReverseSumEstimate e;
    e.value = reverse_sum(x, R, T);
    e.coarse = reverse_sum(x, R / 2, T / 4);
    e.extrapolated = e.value + (e.value - e.coarse) / 3.0;
    return e;
}

} // namespace axiswalk
