#include "axiswalk/invariant.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "axiswalk/axis_chain.hpp"
#include "axiswalk/cone.hpp"

namespace axiswalk {

struct EmbeddedKernels::Impl {
    std::int64_t R = 0;
    std::vector<LatticePoint> axis;
    std::vector<LatticePoint> boundary;
    Eigen::MatrixXd A; // axis x boundary
    Eigen::MatrixXd C; // boundary x axis
    std::vector<double> rho;
    std::vector<double> origin;
    std::vector<double> exit_norm;
};

namespace {

std::size_t boundary_index(LatticePoint p, std::int64_t R) {
    // Quadrant q in (++, -+, +-, --) order; within a quadrant (1,k) for
    // k = 1..R-1 then (k,1) for k = 2..R-1.
    const std::size_t per = static_cast<std::size_t>(2 * (R - 1) - 1);
    const std::size_t q = (p.x1 < 0 ? 1 : 0) + (p.x2 < 0 ? 2 : 0);
    const std::int64_t a = std::llabs(p.x1);
    const std::int64_t b = std::llabs(p.x2);
    const std::size_t within =
        a == 1 ? static_cast<std::size_t>(b - 1) : static_cast<std::size_t>(R - 1 + (a - 2));
    return q * per + within;
}

} // namespace

EmbeddedKernels::EmbeddedKernels(const WalkParams& params, std::int64_t R) : impl_(std::make_unique<Impl>()) {
    if (R < 3) {
        throw PreconditionError("embedded kernels need R >= 3");
    }
    Impl& m = *impl_;
    m.R = R;
    const AxisChain chain(params, R);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        m.axis.push_back(chain.site_of(k));
    }
    for (int q = 0; q < 4; ++q) {
        const std::int64_t s1 = (q & 1) ? -1 : 1;
        const std::int64_t s2 = (q & 2) ? -1 : 1;
        for (std::int64_t k = 1; k <= R - 1; ++k) {
            m.boundary.push_back({s1, s2 * k});
        }
        for (std::int64_t k = 2; k <= R - 1; ++k) {
            m.boundary.push_back({s1 * k, s2});
        }
    }
    const auto na = static_cast<Eigen::Index>(m.axis.size());
    const auto nb = static_cast<Eigen::Index>(m.boundary.size());
    m.A = Eigen::MatrixXd::Zero(na, nb);
    m.C = Eigen::MatrixXd::Zero(nb, na);

    const std::vector<double> t = chain.expected_time();
    const std::vector<double> o = chain.origin_visits();
    m.rho.resize(m.axis.size());
    m.origin.resize(m.axis.size());
    m.exit_norm.resize(m.axis.size());
    for (Eigen::Index x = 0; x < na; ++x) {
        const auto xs = static_cast<std::size_t>(x);
        m.rho[xs] = t[xs + 1];
        m.origin[xs] = o[xs + 1];
        const EmpiricalMeasure law = absorption_law(chain, m.axis[xs]);
        double norm_mean = 0.0;
        for (const auto& [site, mass] : law.support()) {
            m.A(x, static_cast<Eigen::Index>(boundary_index(site, R))) += mass;
            norm_mean += mass * static_cast<double>(max_norm(site));
        }
        m.exit_norm[xs] = norm_mean;
    }

    const QuadrantGreen green(R);
    for (Eigen::Index w = 0; w < nb; ++w) {
        const LatticePoint site = m.boundary[static_cast<std::size_t>(w)];
        const std::int64_t s1 = site.x1 > 0 ? 1 : -1;
        const std::int64_t s2 = site.x2 > 0 ? 1 : -1;
        const LatticePoint wpos{site.x1 * s1, site.x2 * s2};
        for (std::int64_t j = 1; j <= R - 1; ++j) {
            const double to_x2 = green.exit_probability(wpos, {0, j});
            const double to_x1 = green.exit_probability(wpos, {j, 0});
            m.C(w, static_cast<Eigen::Index>(chain.index_of({0, s2 * j}) - 1)) += to_x2;
            m.C(w, static_cast<Eigen::Index>(chain.index_of({s1 * j, 0}) - 1)) += to_x1;
        }
    }
}

EmbeddedKernels::~EmbeddedKernels() = default;
EmbeddedKernels::EmbeddedKernels(EmbeddedKernels&&) noexcept = default;
EmbeddedKernels& EmbeddedKernels::operator=(EmbeddedKernels&&) noexcept = default;

std::int64_t EmbeddedKernels::radius() const { return impl_->R; }
const std::vector<LatticePoint>& EmbeddedKernels::axis_states() const { return impl_->axis; }
const std::vector<LatticePoint>& EmbeddedKernels::boundary_states() const { return impl_->boundary; }
const std::vector<double>& EmbeddedKernels::expected_rho() const { return impl_->rho; }
const std::vector<double>& EmbeddedKernels::origin_visits() const { return impl_->origin; }
const std::vector<double>& EmbeddedKernels::exit_norm_mean() const { return impl_->exit_norm; }

InvariantResult EmbeddedKernels::invariant(EmbeddedChain chain, const InvariantOptions& opts) const {
    const Impl& m = *impl_;
    const bool entry = chain == EmbeddedChain::Entry;
    const std::vector<LatticePoint>& states = entry ? m.axis : m.boundary;
    const Eigen::MatrixXd& first = entry ? m.A : m.C;
    const Eigen::MatrixXd& second = entry ? m.C : m.A;
    const auto n = static_cast<Eigen::Index>(states.size());

    auto apply = [&](const Eigen::RowVectorXd& v) -> Eigen::RowVectorXd { return (v * first) * second; };

    Eigen::RowVectorXd pi = Eigen::RowVectorXd::Constant(n, 1.0 / static_cast<double>(n));
    InvariantResult out;
    bool converged = false;
    for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
        Eigen::RowVectorXd next = apply(pi);
        const double mass = next.sum();
        if (!(mass > 0.0)) {
            throw std::runtime_error("embedded chain lost all mass; R is too small");
        }
        next /= mass;
        const double tv = 0.5 * (next - pi).cwiseAbs().sum();
        pi = next;
        out.iterations = it;
        if (tv < opts.tol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw std::runtime_error("power iteration did not converge within " + std::to_string(opts.max_iterations) +
                                 " iterations (R too small or alpha too close to 1)");
    }
    const Eigen::RowVectorXd image = apply(pi);
    const double mass = image.sum();
    out.leak = 1.0 - mass;
    out.residual = (image / mass - pi).cwiseAbs().sum();
    for (Eigen::Index k = 0; k < n; ++k) {
        out.measure.add(states[static_cast<std::size_t>(k)], pi(k));
    }
    return out;
}

InvariantResult embedded_invariant(EmbeddedChain chain, const WalkParams& params, std::int64_t R,
                                   const InvariantOptions& opts) {
    if (!(params.alpha() > 1.0)) {
        throw PreconditionError("embedded_invariant requires alpha > 1");
    }
    if (R < 20) {
        throw PreconditionError("embedded_invariant requires R >= 20");
    }
    return EmbeddedKernels(params, R).invariant(chain, opts);
}

Constants compute_constants(const WalkParams& params, std::int64_t R, const InvariantOptions& opts,
                            bool allow_subcritical) {
    if (!(params.alpha() > 3.0) && !allow_subcritical) {
        throw PreconditionError("constants require alpha > 3 (pass allow_subcritical to override)");
    }
    if (!(params.alpha() > 1.0)) {
        throw PreconditionError("constants require alpha > 1");
    }
    if (R < 20) {
        throw PreconditionError("constants require R >= 20");
    }
    const EmbeddedKernels kernels(params, R);
    Constants k;
    k.entry = kernels.invariant(EmbeddedChain::Entry, opts);
    k.exit = kernels.invariant(EmbeddedChain::Exit, opts);

    k.mean_exit_norm = k.exit.measure.expectation([](LatticePoint p) { return static_cast<double>(max_norm(p)); });
    const auto& states = kernels.axis_states();
    for (std::size_t i = 0; i < states.size(); ++i) {
        const double w = k.entry.measure.mass_of(states[i]);
        k.mean_rho += w * kernels.expected_rho()[i];
        k.mean_origin_visits += w * kernels.origin_visits()[i];
        k.mean_exit_norm_from_entry += w * kernels.exit_norm_mean()[i];
    }
    const double pi = std::numbers::pi;
    k.c1 = (pi / 8.0) / k.mean_exit_norm;
    k.c0 = (16.0 / pi) * k.mean_exit_norm_from_entry;
    k.c2 = (2.0 / pi) * k.mean_exit_norm;
    k.c = k.c1 * k.mean_rho;
    k.c_prime = k.c1 * k.mean_origin_visits;
    k.c_f["axis_local_time"] = k.c;
    k.c_f["origin_local_time"] = k.c_prime;
    return k;
}

} // namespace axiswalk
