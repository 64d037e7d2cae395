#include "axiswalk/asymptotics.hpp"

#include <algorithm>
#include <boost/math/distributions/binomial.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "axiswalk/lattice.hpp"

namespace axiswalk {

namespace {


double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 64) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += v[i];
        }
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) % 2) == 0; }

/// Binomial coefficients fit in 64-bit integers up to this n.
constexpr std::int64_t kExactBinomialLimit = 62;

std::uint64_t exact_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // c * (n - k + i) / i without overflowing the intermediate product.
        const auto f = static_cast<std::uint64_t>(n - k + i);
        const auto d = static_cast<std::uint64_t>(i);
        c = c / d * f + c % d * f / d;
    }
    return c;
}

/// 2^-n C(n, k). Exact integers for small n; otherwise the binomial pmf,
/// which avoids the cancellation between lgamma values of size n log n.
double binomial_half_pmf(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    if (n <= kExactBinomialLimit) {
        return std::ldexp(static_cast<double>(exact_binomial(n, k)), -static_cast<int>(n));
    }
    return boost::math::pdf(boost::math::binomial_distribution<double>(static_cast<double>(n), 0.5),
                            static_cast<double>(k));
}

/// sum_j 2^-n C(n, j) f(j) over j of fixed parity within [lo, hi], by ratio
/// recurrence outward from the point nearest n/2.
template <typename F>
double binomial_mixture(std::int64_t n, std::int64_t lo, std::int64_t hi, std::int64_t parity, F f,
                        const std::vector<double>& inv) {
    if (lo % 2 != parity % 2) {
        ++lo;
    }
    if (hi % 2 != parity % 2) {
        --hi;
    }
    if (lo > hi) {
        return 0.0;
    }
    std::int64_t c = n / 2;
    if (c % 2 != parity % 2) {
        ++c;
    }
    c = std::clamp(c, lo, hi);
    const double wc = binomial_half_pmf(n, c);
    double up = 0.0;
    double w = wc;
    for (std::int64_t j = c; j <= hi; j += 2) {
        up += w * f(j);
        w *= static_cast<double>((n - j) * (n - j - 1)) * inv[static_cast<std::size_t>(j + 1)] *
             inv[static_cast<std::size_t>(j + 2)];
    }
    double down = 0.0;
    w = wc;
    for (std::int64_t j = c - 2; j >= lo; j -= 2) {
        w *= static_cast<double>((j + 2) * (j + 1)) * inv[static_cast<std::size_t>(n - j - 1)] *
             inv[static_cast<std::size_t>(n - j)];
        down += w * f(j);
    }
    return up + down;
}

std::vector<double> reciprocals(std::int64_t n) {
    std::vector<double> inv(static_cast<std::size_t>(n) + 3, 0.0);
    for (std::size_t i = 1; i < inv.size(); ++i) {
        inv[i] = 1.0 / static_cast<double>(i);
    }
    return inv;
}

} // namespace

double log_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) {
        return -std::numeric_limits<double>::infinity();
    }
    if (k == 0 || k == n) {
        return 0.0;
    }
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

BinomialPoint binomial_point(std::int64_t k, std::int64_t x) {
    if (k < 1) {
        throw PreconditionError("binomial_point requires k >= 1");
    }
    BinomialPoint p;
    const double kd = static_cast<double>(k);
    const double xd = static_cast<double>(x);
    p.gaussian = std::sqrt(2.0 / (std::numbers::pi * kd)) * std::exp(-xd * xd / (2.0 * kd));
    const std::int64_t ax = x < 0 ? -x : x;
    if (ax <= k && same_parity(k, ax)) {
        p.exact = binomial_half_pmf(k, (k - ax) / 2);
    }
    return p;
}

double reflection_stay_positive(std::int64_t x, std::int64_t y, std::int64_t k) {
    if (x < 1 || y < 1 || k < 0) {
        throw PreconditionError("reflection_stay_positive requires x, y >= 1 and k >= 0");
    }
    const std::int64_t d = x > y ? x - y : y - x;
    if (d > k || !same_parity(k, d)) {
        return 0.0;
    }
    if (k == 0) {
        return 1.0;
    }
    // 2^-k [C(k, m) - C(k, m - s)] with m = (k - d)/2 and s = min(x, y).
    const std::int64_t m = (k - d) / 2;
    const std::int64_t s = std::min(x, y);
    if (k <= kExactBinomialLimit) {
        const std::uint64_t diff = exact_binomial(k, m) - exact_binomial(k, m - s);
        return std::ldexp(static_cast<double>(diff), -static_cast<int>(k));
    }
    const double main = binomial_half_pmf(k, m);
    if (m - s < 0 || main == 0.0) {
        return main;
    }
    double log_ratio = 0.0; // log C(k, m - s) / C(k, m)
    for (std::int64_t i = 0; i < s; ++i) {
        const double num = static_cast<double>(m - i);
        const double den = static_cast<double>(k - m + i + 1);
        log_ratio += std::log1p((num - den) / den);
    }
    return main * -std::expm1(log_ratio);
}

double stay_positive(std::int64_t u, std::int64_t m) {
    if (u < 1 || m < 1) {
        throw PreconditionError("stay_positive requires u, m >= 1");
    }
    std::vector<double> terms;
    for (std::int64_t j = 1; j <= u + m; ++j) {
        const double v = reflection_stay_positive(u, j, m);
        if (v != 0.0) {
            terms.push_back(v);
        }
    }
    return pairwise_sum(terms.data(), terms.size());
}

double stay_positive_closed_form(std::int64_t u, std::int64_t m) {
    if (u < 1 || m < 0) {
        throw PreconditionError("stay_positive requires u >= 1");
    }
    if (m == 0) {
        return 1.0;
    }
    double s = 0.0;
    const std::int64_t lo = std::max<std::int64_t>(-u + 1, -m);
    const std::int64_t hi = std::min<std::int64_t>(u, m);
    for (std::int64_t z = lo; z <= hi; ++z) {
        s += binomial_point(m, z).exact;
    }
    return std::min(1.0, s);
}

double binomial_upper_tail(std::int64_t n, std::int64_t z) {
    if (n < 0) {
        throw PreconditionError("binomial_upper_tail requires n >= 0");
    }
    if (n == 0) {
        return z <= 0 ? 1.0 : 0.0;
    }
    // Z_n = 2B - n with B ~ Binomial(n, 1/2); Z_n >= z iff B >= ceil((n + z) / 2).
    const std::int64_t t = n + z;
    const std::int64_t b = t <= 0 ? 0 : (t + 1) / 2;
    if (b <= 0) {
        return 1.0;
    }
    if (b > n) {
        return 0.0;
    }
    return boost::math::cdf(boost::math::complement(
        boost::math::binomial_distribution<double>(static_cast<double>(n), 0.5), static_cast<double>(b - 1)));
}

double chernoff_window_bound(std::int64_t k, double eps) {
    if (k < 1 || !(eps > 0.0 && eps < 1.0)) {
        throw PreconditionError("chernoff_window_bound requires k >= 1 and 0 < eps < 1");
    }
    return std::exp(-eps * eps * static_cast<double>(k) / 6.0);
}

std::pair<std::int64_t, std::int64_t> chernoff_window(std::int64_t k, double eps) {
    if (k < 1 || !(eps > 0.0 && eps < 1.0)) {
        throw PreconditionError("chernoff_window requires k >= 1 and 0 < eps < 1");
    }
    const double n = static_cast<double>(k - 1);
    const double tiny = 1e-9; // guard exact integer endpoints against rounding
    return {static_cast<std::int64_t>(std::ceil(n * (1.0 - eps) / 2.0 - tiny)),
            static_cast<std::int64_t>(std::floor(n * (1.0 + eps) / 2.0 + tiny))};
}

double adaptive_window_eps(std::int64_t k, double tolerance) {
    // Smallest eps with k exp(-eps^2 k / 6) <= tolerance; >= 1 means no truncation.
    const double kd = static_cast<double>(k);
    const double need = std::log(kd / tolerance);
    if (need <= 0.0) {
        return 0.0;
    }
    return std::sqrt(6.0 * need / kd);
}

namespace {

/// Window [lo, hi] for step count k together with its budget k e^{-eps^2 k/6}.
struct Window {
    std::int64_t lo;
    std::int64_t hi;
    double budget;
};

Window window_for(std::int64_t k, double tolerance) {
    const double eps = adaptive_window_eps(k, tolerance);
    if (!(eps < 1.0)) {
        return {0, k - 1, 0.0};
    }
    const auto [lo, hi] = chernoff_window(k, eps);
    return {lo, hi, static_cast<double>(k) * chernoff_window_bound(k, eps)};
}

} // namespace

SemiAnalyticValue cone_exit_semianalytic(std::int64_t x, std::int64_t y, const SemiAnalyticOptions& opts) {
    if (x < 1 || y < 1) {
        throw PreconditionError("cone_exit_semianalytic requires x, y >= 1");
    }
    const std::int64_t K = opts.k_max > 0 ? opts.k_max : 100 * x * x;
    SemiAnalyticValue out;
    out.k_max = K;
    // a[j] = P_1(Z stays > 0, Z_j = y); b[m] = P_x(Z stays > 0, Z_m = 1).
    std::vector<double> a(static_cast<std::size_t>(K), 0.0);
    std::vector<double> b(static_cast<std::size_t>(K), 0.0);
    for (std::int64_t j = 0; j < K; ++j) {
        a[static_cast<std::size_t>(j)] = reflection_stay_positive(1, y, j);
        b[static_cast<std::size_t>(j)] = reflection_stay_positive(x, 1, j);
    }
    const std::vector<double> inv = reciprocals(K);
    std::vector<double> summand(static_cast<std::size_t>(K) + 1, 0.0);
    double budget = 0.0;
    for (std::int64_t k = std::max<std::int64_t>(1, x + y - 1); k <= K; ++k) {
        const std::int64_t n = k - 1;
        if (!same_parity(n, x + y)) {
            continue;
        }
        const Window w = window_for(k, opts.window_tolerance);
        const std::int64_t lo = std::max(w.lo, y - 1);
        const std::int64_t hi = std::min(w.hi, n - (x - 1));
        summand[static_cast<std::size_t>(k)] =
            0.25 * binomial_mixture(
                       n, lo, hi, y - 1,
                       [&](std::int64_t j) { return a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(n - j)]; },
                       inv);
        budget += 0.25 * w.budget;
    }
    out.value = pairwise_sum(summand.data(), summand.size());
    out.window_budget = budget;
    const auto tail_from = static_cast<std::size_t>(std::ceil(0.9 * static_cast<double>(K)));
    const double last = pairwise_sum(summand.data() + tail_from, summand.size() - tail_from);
    // With a k^-3 summand, sum_{k>K} = S(0.9K, K] / (1/0.81 - 1).
    out.tail_estimate = last / (1.0 / 0.81 - 1.0);
    return out;
}

SemiAnalyticValue eta_tail_semianalytic(std::int64_t x, std::int64_t k, double window_tolerance) {
    if (x < 1 || k < x) {
        throw PreconditionError("eta_tail_semianalytic requires x >= 1 and k >= x");
    }
    const std::int64_t n = k - 1;
    // Over m horizontal steps (x1 from 1) and n - m vertical ones (x2 from x):
    // exit vertically needs x2 at 1, exit horizontally needs x1 at 1.
    std::vector<double> s1(static_cast<std::size_t>(n) + 1);
    std::vector<double> sx(static_cast<std::size_t>(n) + 1);
    std::vector<double> end1(static_cast<std::size_t>(n) + 1);
    std::vector<double> endx(static_cast<std::size_t>(n) + 1);
    for (std::int64_t m = 0; m <= n; ++m) {
        const auto i = static_cast<std::size_t>(m);
        s1[i] = stay_positive_closed_form(1, m);
        sx[i] = stay_positive_closed_form(x, m);
        end1[i] = reflection_stay_positive(1, 1, m);
        endx[i] = reflection_stay_positive(x, 1, m);
    }
    const std::vector<double> inv = reciprocals(n);
    const Window w = window_for(k, window_tolerance);
    auto term = [&](std::int64_t m) {
        const auto i = static_cast<std::size_t>(m);
        const auto r = static_cast<std::size_t>(n - m);
        return s1[i] * endx[r] + end1[i] * sx[r];
    };
    SemiAnalyticValue out;
    out.k_max = k;
    out.value = 0.25 * (binomial_mixture(n, w.lo, w.hi, 0, term, inv) + binomial_mixture(n, w.lo, w.hi, 1, term, inv));
    out.window_budget = 0.25 * 2.0 * w.budget;
    return out;
}

} // namespace axiswalk
