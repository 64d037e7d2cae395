#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "axiswalk/asymptotics.hpp"
#include "axiswalk/axis_chain.hpp"
#include "axiswalk/cone.hpp"
#include "axiswalk/excursion.hpp"
#include "axiswalk/invariant.hpp"
#include "axiswalk/measure.hpp"
#include "axiswalk/montecarlo.hpp"

namespace axiswalk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "axiswalk-output/1";

/// Measures serialise as {"support": [[x1, x2, mass], ...], "deficit": d}.
Json to_json(const EmpiricalMeasure& m);
Json to_json(const LinearFit& f);
Json to_json(const RunStats& s);
Json to_json(const AxisSolveResult& r);
Json to_json(const ConeExitResult& r);
Json to_json(const SemiAnalyticValue& v);
Json to_json(const InvariantResult& r);
Json to_json(const Constants& c);
Json to_json(const Campaign& c);
Json to_json(const Estimate& e);
Json to_json(const EstimateReport& r);

/// Parse "x1,x2".
LatticePoint parse_point(const std::string& text);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);
/// Shortest round-trip decimal for a double.
std::string format_number(double v);

std::string measure_csv(const EmpiricalMeasure& m);
/// One row per (horizon, estimator).
std::string report_csv(const EstimateReport& r);

} // namespace axiswalk
