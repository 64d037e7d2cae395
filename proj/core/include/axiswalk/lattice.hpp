#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace axiswalk {

/// A site of Z^2.
struct LatticePoint {
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
};

std::string to_string(LatticePoint p);

constexpr std::int64_t max_norm(LatticePoint p) {
    const std::int64_t a = p.x1 < 0 ? -p.x1 : p.x1;
    const std::int64_t b = p.x2 < 0 ? -p.x2 : p.x2;
    return a > b ? a : b;
}

constexpr std::int64_t min_abs(LatticePoint p) {
    const std::int64_t a = p.x1 < 0 ? -p.x1 : p.x1;
    const std::int64_t b = p.x2 < 0 ? -p.x2 : p.x2;
    return a < b ? a : b;
}

constexpr bool on_axis(LatticePoint p) { return p.x1 == 0 || p.x2 == 0; }
constexpr bool in_cone(LatticePoint p) { return p.x1 != 0 && p.x2 != 0; }
/// Cone sites adjacent to the axes (min(|x1|,|x2|) = 1).
constexpr bool on_cone_boundary(LatticePoint p) { return in_cone(p) && min_abs(p) == 1; }

enum class Arm : std::uint8_t { PlusX1, MinusX1, PlusX2, MinusX2 };

/// Unit vector pointing outward along an arm.
constexpr LatticePoint arm_direction(Arm a) {
    switch (a) {
    case Arm::PlusX1: return {1, 0};
    case Arm::MinusX1: return {-1, 0};
    case Arm::PlusX2: return {0, 1};
    case Arm::MinusX2: return {0, -1};
    }
    return {0, 0};
}

constexpr LatticePoint arm_site(Arm a, std::int64_t level) {
    const LatticePoint d = arm_direction(a);
    return {d.x1 * level, d.x2 * level};
}

struct RegionKind {
    enum class Kind : std::uint8_t { Cone, AxisArm, Origin };
    Kind kind = Kind::Origin;
    Arm arm = Arm::PlusX1;  // meaningful for AxisArm only
    std::int64_t level = 0; // |nonzero coordinate|, AxisArm only

    friend constexpr bool operator==(const RegionKind&, const RegionKind&) = default;
};

RegionKind classify(LatticePoint p);

/// Return-force exponent of the walk on the axes.
class WalkParams {
  public:
    explicit WalkParams(double alpha);
    double alpha() const { return alpha_; }

    /// Probability 1/(4 i^alpha) of each non-inward move at axis level i >= 1.
    double outward_probability(std::int64_t level) const;

  private:
    double alpha_;
};

struct Outcome {
    LatticePoint site;
    double probability = 0.0;
};

/// At most four nearest-neighbour outcomes. For axis sites the inward move is
/// stored last; otherwise the order is (+x1, -x1, +x2, -x2).
struct TransitionDist {
    std::array<Outcome, 4> outcomes{};
    std::size_t size = 0;

    const Outcome* begin() const { return outcomes.data(); }
    const Outcome* end() const { return outcomes.data() + size; }
    double probability_of(LatticePoint site) const;
};

TransitionDist transition_distribution(LatticePoint p, const WalkParams& params);

/// Inverse-CDF sample of the transition law for a uniform draw u in [0,1).
LatticePoint step_with_draw(LatticePoint p, const WalkParams& params, double u);

class RandomSource;
LatticePoint step(LatticePoint p, const WalkParams& params, RandomSource& rng);

/// Lattice symmetry generated by the coordinate swap and the two sign flips.
struct Symmetry {
    bool swap = false;
    bool flip1 = false;
    bool flip2 = false;

    LatticePoint apply(LatticePoint p) const;
};

/// The eight elements of the dihedral group of the square.
std::array<Symmetry, 8> dihedral_group();

/// Thrown when an operation receives arguments outside its domain.
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace axiswalk

template <>
struct std::hash<axiswalk::LatticePoint> {
    std::size_t operator()(const axiswalk::LatticePoint& p) const noexcept {
        const auto a = static_cast<std::uint64_t>(p.x1) * 0x9E3779B97F4A7C15ULL;
        const auto b = static_cast<std::uint64_t>(p.x2) + 0x632BE59BD9B4E019ULL;
        return static_cast<std::size_t>(a ^ (b + (a << 6) + (a >> 2)));
    }
};
