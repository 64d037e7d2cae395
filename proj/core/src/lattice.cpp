#include "axiswalk/lattice.hpp"

#include <cmath>

#include "axiswalk/random.hpp"

namespace axiswalk {

std::string to_string(LatticePoint p) { return "(" + std::to_string(p.x1) + "," + std::to_string(p.x2) + ")"; }

RegionKind classify(LatticePoint p) {
    if (p.x1 == 0 && p.x2 == 0) {
        return {RegionKind::Kind::Origin, Arm::PlusX1, 0};
    }
    if (p.x2 == 0) {
        return {RegionKind::Kind::AxisArm, p.x1 > 0 ? Arm::PlusX1 : Arm::MinusX1, std::llabs(p.x1)};
    }
    if (p.x1 == 0) {
        return {RegionKind::Kind::AxisArm, p.x2 > 0 ? Arm::PlusX2 : Arm::MinusX2, std::llabs(p.x2)};
    }
    return {RegionKind::Kind::Cone, Arm::PlusX1, 0};
}

WalkParams::WalkParams(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw PreconditionError("alpha must be a finite real >= 0");
    }
}

double WalkParams::outward_probability(std::int64_t level) const {
    if (level <= 1) {
        return 0.25;
    }
    return 0.25 * std::exp(-alpha_ * std::log(static_cast<double>(level)));
}

double TransitionDist::probability_of(LatticePoint site) const {
    double total = 0.0;
    for (const Outcome& o : *this) {
        if (o.site == site) {
            total += o.probability;
        }
    }
    return total;
}

namespace {

constexpr std::array<LatticePoint, 4> kNeighbourOrder{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

} // namespace

TransitionDist transition_distribution(LatticePoint p, const WalkParams& params) {
    TransitionDist dist;
    const RegionKind region = classify(p);
    if (region.kind != RegionKind::Kind::AxisArm) {
        for (const LatticePoint d : kNeighbourOrder) {
            dist.outcomes[dist.size++] = {p + d, 0.25};
        }
        return dist;
    }
    const LatticePoint out = arm_direction(region.arm);
    const LatticePoint in{-out.x1, -out.x2};
    const double q = params.outward_probability(region.level);
    for (const LatticePoint d : kNeighbourOrder) {
        if (d != in) {
            dist.outcomes[dist.size++] = {p + d, q};
        }
    }
    dist.outcomes[dist.size++] = {p + in, 1.0 - 3.0 * q};
    return dist;
}

LatticePoint step_with_draw(LatticePoint p, const WalkParams& params, double u) {
    const TransitionDist dist = transition_distribution(p, params);
    double cdf = 0.0;
    for (std::size_t i = 0; i + 1 < dist.size; ++i) {
        cdf += dist.outcomes[i].probability;
        if (u < cdf) {
            return dist.outcomes[i].site;
        }
    }
    return dist.outcomes[dist.size - 1].site;
}

LatticePoint step(LatticePoint p, const WalkParams& params, RandomSource& rng) {
    return step_with_draw(p, params, rng.uniform());
}

LatticePoint Symmetry::apply(LatticePoint p) const {
    LatticePoint q = swap ? LatticePoint{p.x2, p.x1} : p;
    if (flip1) {
        q.x1 = -q.x1;
    }
    if (flip2) {
        q.x2 = -q.x2;
    }
    return q;
}

std::array<Symmetry, 8> dihedral_group() {
    std::array<Symmetry, 8> group{};
    std::size_t k = 0;
    for (int s = 0; s < 2; ++s) {
        for (int f1 = 0; f1 < 2; ++f1) {
            for (int f2 = 0; f2 < 2; ++f2) {
                group[k++] = {s == 1, f1 == 1, f2 == 1};
            }
        }
    }
    return group;
}

} // namespace axiswalk
