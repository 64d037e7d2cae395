#pragma once

#include <memory>
#include <string>
#include <vector>

#include "axiswalk/lattice.hpp"

namespace axiswalk {

/// Incremental evaluator of a functional of an axis segment. Sites arrive one
/// at a time; implementations must not retain the segment.
///
/// Contract: value() >= 0 and non-decreasing as sites are pushed.
class Functional {
  public:
    virtual ~Functional() = default;

    virtual std::string id() const = 0;
    /// Start a new, empty segment.
    virtual void reset() = 0;
    virtual void push(LatticePoint site) = 0;
    virtual double value() const = 0;
    virtual std::unique_ptr<Functional> clone() const = 0;
};

/// Number of sites in the segment (time spent on the axes).
class AxisLocalTime final : public Functional {
  public:
    std::string id() const override { return "axis_local_time"; }
    void reset() override { count_ = 0; }
    void push(LatticePoint) override { ++count_; }
    double value() const override { return static_cast<double>(count_); }
    std::unique_ptr<Functional> clone() const override { return std::make_unique<AxisLocalTime>(*this); }

  private:
    std::uint64_t count_ = 0;
};

/// Number of visits to the origin within the segment.
class OriginLocalTime final : public Functional {
  public:
    std::string id() const override { return "origin_local_time"; }
    void reset() override { count_ = 0; }
    void push(LatticePoint p) override { count_ += (p.x1 == 0 && p.x2 == 0) ? 1 : 0; }
    double value() const override { return static_cast<double>(count_); }
    std::unique_ptr<Functional> clone() const override { return std::make_unique<OriginLocalTime>(*this); }

  private:
    std::uint64_t count_ = 0;
};

using FunctionalList = std::vector<std::unique_ptr<Functional>>;

FunctionalList builtin_functionals();
FunctionalList clone_functionals(const FunctionalList& fs);
/// Resolve ids against the built-ins; throws PreconditionError on unknown ids.
FunctionalList functionals_by_id(const std::vector<std::string>& ids);

} // namespace axiswalk
