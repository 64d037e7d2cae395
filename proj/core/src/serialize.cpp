#include "axiswalk/serialize.hpp"

#include <charconv>
#include <cmath>

namespace axiswalk {

Json to_json(const EmpiricalMeasure& m) {
    Json support = Json::array();
    for (const auto& [p, mass] : m.support()) {
        support.push_back(Json::array({p.x1, p.x2, mass}));
    }
    return Json{{"support", support}, {"total", m.total()}, {"deficit", m.deficit()}};
}

Json to_json(const LinearFit& f) {
    return Json{{"slope", f.slope}, {"slope_stderr", f.slope_stderr}, {"intercept", f.intercept}, {"points", f.points}};
}

Json to_json(const RunStats& s) {
    Json fs = Json::array();
    for (const auto& f : s.functionals) {
        fs.push_back(Json{{"id", f.id}, {"sum", f.sum}, {"tail", f.tail}});
    }
    Json entry = Json::array();
    for (const auto& [p, c] : s.entry_histogram) {
        entry.push_back(Json::array({p.x1, p.x2, c}));
    }
    Json exit = Json::array();
    for (const auto& [p, c] : s.exit_histogram) {
        exit.push_back(Json::array({p.x1, p.x2, c}));
    }
    Json durations = Json::array();
    for (const auto& [r, c] : s.duration_histogram) {
        durations.push_back(Json::array({r, c}));
    }
    return Json{{"n", s.n},
                {"N_n", s.excursions},
                {"entries", s.entries},
                {"local_time_axis", s.local_time_axis},
                {"local_time_origin", s.local_time_origin},
                {"local_time_cone", s.local_time_cone},
                {"sum_eta_minus_rho_prev", s.cone_time_completed},
                {"sum_rho_minus_eta", s.axis_time_completed},
                {"tail_axis_time", s.tail_axis_time},
                {"max_entry_norm", s.max_entry_norm},
                {"entry_norm_sum", s.entry_norm_sum},
                {"functionals", fs},
                {"entry_histogram", entry},
                {"exit_histogram", exit},
                {"duration_histogram", durations}};
}

Json to_json(const AxisSolveResult& r) {
    return Json{{"absorption_law", to_json(r.absorption_law)},
                {"expected_rho", r.expected_rho},
                {"expected_rho_sq", r.expected_rho_sq},
                {"origin_visits", r.origin_visits},
                {"survival", r.survival}};
}

Json to_json(const ConeExitResult& r) {
    return Json{{"exit_law", to_json(r.exit_law)},
                {"time_law", r.time_law},
                {"alive", r.alive},
                {"escaped", r.escaped},
                {"deficit", r.alive + r.escaped}};
}

Json to_json(const SemiAnalyticValue& v) {
    return Json{{"value", v.value},
                {"window_budget", v.window_budget},
                {"tail_estimate", v.tail_estimate},
                {"error_budget", v.error_budget()},
                {"k_max", v.k_max}};
}

Json to_json(const InvariantResult& r) {
    return Json{{"measure", to_json(r.measure)},
                {"iterations", r.iterations},
                {"stationarity_residual", r.residual},
                {"leak_per_step", r.leak}};
}

Json to_json(const Constants& c) {
    Json cf = Json::object();
    for (const auto& [k, v] : c.c_f) {
        cf[k] = v;
    }
    return Json{{"c0", c.c0},
                {"c1", c.c1},
                {"c2", c.c2},
                {"c", c.c},
                {"c_prime", c.c_prime},
                {"c_f", cf},
                {"E_pi_dagger_norm", c.mean_exit_norm},
                {"E_pi_star_rho", c.mean_rho},
                {"E_pi_star_origin_visits", c.mean_origin_visits},
                {"E_pi_star_exit_norm", c.mean_exit_norm_from_entry},
                {"entry_chain",
                 {{"iterations", c.entry.iterations},
                  {"stationarity_residual", c.entry.residual},
                  {"leak_per_step", c.entry.leak}}},
                {"exit_chain",
                 {{"iterations", c.exit.iterations},
                  {"stationarity_residual", c.exit.residual},
                  {"leak_per_step", c.exit.leak}}}};
}

Json to_json(const Campaign& c) {
    return Json{{"alpha", c.alpha},         {"n", c.n},
                {"replicas", c.replicas},   {"base_seed", c.base_seed},
                {"functionals", c.functional_ids}, {"checkpoints", c.checkpoints}};
}

Json to_json(const Estimate& e) { return Json{{"mean", e.mean}, {"stderr", e.std_error}, {"replicas", e.count}}; }

Json to_json(const EstimateReport& r) {
    Json horizons = Json::array();
    for (const auto& h : r.horizons) {
        Json est = Json::object();
        for (const auto& [name, e] : h.estimates) {
            est[name] = to_json(e);
        }
        horizons.push_back(Json{{"n", h.n}, {"estimates", est}});
    }
    return Json{{"campaign", to_json(r.campaign)},
                {"horizons", horizons},
                {"replica_large_entries", r.replica_large_entries},
                {"merged", to_json(r.merged)}};
}

LatticePoint parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw PreconditionError("expected a point \"x1,x2\", got \"" + text + "\"");
    }
    auto parse = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw PreconditionError("expected a point \"x1,x2\", got \"" + text + "\"");
        }
        return v;
    };
    const std::string_view all(text);
    return {parse(all.substr(0, comma)), parse(all.substr(comma + 1))};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

std::string format_number(double v) {
    if (!std::isfinite(v)) {
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string measure_csv(const EmpiricalMeasure& m) {
    std::string out = csv_row({"x1", "x2", "mass"});
    for (const auto& [p, mass] : m.support()) {
        out += csv_row({std::to_string(p.x1), std::to_string(p.x2), format_number(mass)});
    }
    out += csv_row({"deficit", "", format_number(m.deficit())});
    return out;
}

std::string report_csv(const EstimateReport& r) {
    std::string out = csv_row({"n", "estimator", "mean", "stderr", "replicas"});
    for (const auto& h : r.horizons) {
        for (const auto& [name, e] : h.estimates) {
            out += csv_row({std::to_string(h.n), name, format_number(e.mean), format_number(e.std_error),
                            std::to_string(e.count)});
        }
    }
    return out;
}

} // namespace axiswalk
