#pragma once

// Minimal property-testing support: seeded generators for lattice data and a
// driver that runs a predicate over many generated cases.

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <string>

#include "axiswalk/lattice.hpp"

namespace axiswalk::testing {

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// Non-origin axis site with level in [1, max_level].
    LatticePoint axis_site(std::int64_t max_level) {
        return arm_site(static_cast<Arm>(integer(0, 3)), integer(1, max_level));
    }
    LatticePoint cone_site(std::int64_t max_norm) {
        const std::int64_t a = integer(1, max_norm);
        const std::int64_t b = integer(1, max_norm);
        return {coin() ? a : -a, coin() ? b : -b};
    }
    LatticePoint any_site(std::int64_t max_norm) { return {integer(-max_norm, max_norm), integer(-max_norm, max_norm)}; }
    Symmetry symmetry() { return dihedral_group()[static_cast<std::size_t>(integer(0, 7))]; }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

/// Runs `body(gen, case_index)` for `cases` cases; failures carry the case
/// index and seed so they can be replayed.
template <typename Body>
void for_all(std::uint64_t seed, int cases, Body body) {
    Gen gen(seed);
    for (int i = 0; i < cases; ++i) {
        SCOPED_TRACE("property case " + std::to_string(i) + " (seed " + std::to_string(seed) + ")");
        body(gen, i);
        if (::testing::Test::HasFatalFailure()) {
            return;
        }
    }
}

} // namespace axiswalk::testing
