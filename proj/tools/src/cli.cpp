#include "axiswalk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "axiswalk/asymptotics.hpp"
#include "axiswalk/axis_chain.hpp"
#include "axiswalk/cone.hpp"
#include "axiswalk/invariant.hpp"
#include "axiswalk/montecarlo.hpp"
#include "axiswalk/serialize.hpp"
#include "axiswalk/verification.hpp"

namespace axiswalk::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::int64_t kDefaultT = 1'000'000;

struct Config {
    double alpha = 4.0;
    std::string n = "1e6";
    std::string replicas = "20";
    std::optional<std::string> seed;
    std::int64_t R = 200;
    std::optional<std::int64_t> T; ///< unset: 1e6 for exact operations, the suite default for verify
    std::int64_t M = 1000;
    double tol = 1e-10;
    std::string out = ".";
    std::string format = "json";
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool allow_subcritical = false;

    // exact-operation arguments
    std::string x;
    std::string y;
    std::string chain = "entry";
    std::int64_t k = 0;
    std::int64_t z = 0;
    std::int64_t from = 1;
    std::int64_t to = 1;
    std::int64_t u = 1;
    std::int64_t m = 1;
    std::int64_t kmax = 0;
    double eps = 0.3;

    std::vector<int> criteria;
    std::vector<std::string> inputs;
};

std::uint64_t parse_count(const std::string& text, const char* what) {
    // Accepts plain integers and exact scientific forms such as 1e6.
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc() && ptr == text.data() + text.size()) {
        return v;
    }
    double d = 0.0;
    const auto [p2, e2] = std::from_chars(text.data(), text.data() + text.size(), d);
    if (e2 != std::errc() || p2 != text.data() + text.size() || !(d >= 0.0) || d > 9007199254740992.0 ||
        std::floor(d) != d) {
        throw PreconditionError(std::string(what) + " must be a non-negative integer, got \"" + text + "\"");
    }
    return static_cast<std::uint64_t>(d);
}

std::uint64_t parse_seed(const std::string& text) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw PreconditionError("seed must be an unsigned 64-bit decimal, got \"" + text + "\"");
    }
    return v;
}

/// Config as embedded in artifacts. Output directory and job count are
/// excluded: they do not affect results.
Json resolved_config(const Config& c, const std::string& command, const std::string& op) {
    Json j{{"command", command}};
    if (!op.empty()) {
        j["operation"] = op;
    }
    j["alpha"] = c.alpha;
    j["n"] = parse_count(c.n, "n");
    j["replicas"] = parse_count(c.replicas, "replicas");
    j["seed"] = c.seed ? Json(parse_seed(*c.seed)) : Json(nullptr);
    j["R"] = c.R;
    j["T"] = c.T ? Json(*c.T) : Json(nullptr);
    j["M"] = c.M;
    j["tol"] = c.tol;
    j["format"] = c.format;
    j["allow_subcritical"] = c.allow_subcritical;
    return j;
}

Json envelope(const Config& c, const std::string& command, const std::string& op) {
    return Json{{"format_version", kFormatVersion}, {"config", resolved_config(c, command, op)}};
}

void write_file(const fs::path& path, const std::string& content) {
    if (!path.parent_path().empty()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw PreconditionError("cannot write " + path.string());
    }
    f << content;
}

void write_json(const Config& c, const std::string& name, const Json& j) {
    write_file(fs::path(c.out) / (name + ".json"), j.dump(2) + "\n");
}

/// Flat key/value CSV of scalar leaves, for commands whose result is a tree.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
        }
    } else if (j.is_number_float()) {
        rows.emplace_back(prefix, format_number(j.get<double>()));
    } else if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

void write_tree(const Config& c, const std::string& name, const Json& j) {
    if (c.format == "csv") {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(j, "", rows);
        std::string csv = csv_row({"key", "value"});
        for (const auto& [k, v] : rows) {
            csv += csv_row({k, v});
        }
        write_file(fs::path(c.out) / (name + ".csv"), csv);
    } else {
        write_json(c, name, j);
    }
}

void apply_config_file(const std::string& path, Config& c, CLI::App& sub) {
    std::ifstream f(path);
    if (!f) {
        throw PreconditionError("cannot read config file " + path);
    }
    Json j;
    try {
        j = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError("invalid config file " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw PreconditionError("config file must hold a JSON object");
    }
    auto unset = [&](const char* flag) {
        const CLI::Option* opt = sub.get_option_no_throw(flag);
        return opt == nullptr || opt->count() == 0;
    };
    auto as_text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto& [key, v] : j.items()) {
        try {
            if (key == "alpha" && unset("--alpha")) c.alpha = v.get<double>();
            else if (key == "n" && unset("--n")) c.n = as_text(v);
            else if (key == "replicas" && unset("--replicas")) c.replicas = as_text(v);
            else if (key == "seed" && unset("--seed")) c.seed = as_text(v);
            else if (key == "R" && unset("--R")) c.R = v.get<std::int64_t>();
            else if (key == "T" && unset("--T")) c.T = v.get<std::int64_t>();
            else if (key == "M" && unset("--M")) c.M = v.get<std::int64_t>();
            else if (key == "tol" && unset("--tol")) c.tol = v.get<double>();
            else if (key == "out" && unset("--out")) c.out = v.get<std::string>();
            else if (key == "format" && unset("--format")) c.format = v.get<std::string>();
            else if (key == "jobs" && unset("--jobs")) c.jobs = v.get<unsigned>();
            else if (key == "allow_subcritical" && unset("--allow-subcritical")) c.allow_subcritical = v.get<bool>();
        } catch (const nlohmann::json::exception&) {
            throw PreconditionError("config key \"" + key + "\" has the wrong type");
        }
    }
}

void add_common(CLI::App& sub, Config& c) {
    sub.add_option("--alpha", c.alpha, "return-force exponent");
    sub.add_option("--R", c.R, "truncation radius");
    sub.add_option("--out", c.out, "output directory");
    sub.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub.add_option("--jobs", c.jobs, "worker threads");
    sub.add_flag("--allow-subcritical", c.allow_subcritical, "permit alpha <= 3");
}

void add_randomized(CLI::App& sub, Config& c) {
    sub.add_option("--n", c.n, "horizon (integer, 1e6 notation accepted)");
    sub.add_option("--replicas", c.replicas, "independent replicas");
    sub.add_option("--seed", c.seed, "base seed (unsigned 64-bit decimal)");
}

void require_supercritical(const Config& c) {
    if (!(c.alpha > 3.0) && !c.allow_subcritical) {
        throw PreconditionError("alpha must exceed 3 for this command (pass --allow-subcritical to override)");
    }
}

std::uint64_t require_seed(const Config& c) {
    if (!c.seed) {
        throw PreconditionError("--seed is required for randomized commands");
    }
    return parse_seed(*c.seed);
}

int cmd_simulate(const Config& c, std::ostream& out) {
    Campaign camp;
    camp.alpha = c.alpha;
    camp.n = parse_count(c.n, "n");
    camp.replicas = parse_count(c.replicas, "replicas");
    camp.base_seed = require_seed(c);
    camp.jobs = c.jobs;
    if (camp.n >= 1000) {
        camp.checkpoints = {camp.n / 100, camp.n / 10};
    }
    const WalkParams params(c.alpha); // validates alpha
    const EstimateReport report = replicate(camp);
    Json doc = envelope(c, "simulate", "");
    doc["report"] = to_json(report);
    try {
        const EmpiricalInvariants inv = empirical_invariants(report);
        doc["empirical_invariants"] = Json{{"entry_slope", to_json(inv.entry_slope)}, {"exit_slope", to_json(inv.exit_slope)}};
        if (c.format == "csv") {
            write_file(fs::path(c.out) / "simulate_entry_measure.csv", measure_csv(inv.entry));
            write_file(fs::path(c.out) / "simulate_exit_measure.csv", measure_csv(inv.exit));
        }
    } catch (const PreconditionError& e) {
        // Too few excursions or populated shells for a tail fit.
        doc["empirical_invariants"] = Json{{"unavailable", e.what()}};
    }
    if (c.format == "csv") {
        write_file(fs::path(c.out) / "simulate_estimates.csv", report_csv(report));
    } else {
        write_json(c, "simulate", doc);
    }
    for (const auto& [name, e] : report.final_horizon().estimates) {
        out << name << " = " << format_number(e.mean) << " +- " << format_number(e.std_error) << "\n";
    }
    return kExitOk;
}

int cmd_constants(const Config& c, std::ostream& out) {
    require_supercritical(c);
    InvariantOptions opts;
    opts.tol = c.tol;
    const Constants k = compute_constants(WalkParams(c.alpha), c.R, opts, c.allow_subcritical);
    Json doc = envelope(c, "constants", "");
    doc["constants"] = to_json(k);
    write_tree(c, "constants", doc);
    out << "c0 = " << format_number(k.c0) << "\nc1 = " << format_number(k.c1) << "\nc2 = " << format_number(k.c2)
        << "\nc = " << format_number(k.c) << "\nc_prime = " << format_number(k.c_prime) << "\n";
    return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
    VerifyConfig v;
    v.alpha = c.alpha;
    v.R = c.R;
    if (c.T) {
        v.reverse_T = *c.T;
    }
    v.n = parse_count(c.n, "n");
    v.replicas = parse_count(c.replicas, "replicas");
    v.seed = require_seed(c);
    v.jobs = c.jobs;
    v.allow_subcritical = c.allow_subcritical;
    if (!(v.alpha > 3.0) && !v.allow_subcritical) {
        throw PreconditionError("verify requires alpha > 3 (pass --allow-subcritical to override)");
    }
    std::vector<int> ids = c.criteria;
    if (ids.empty()) {
        for (int i = 1; i <= kCriterionCount; ++i) {
            ids.push_back(i);
        }
    }
    Json doc = envelope(c, "verify", "");
    doc["config"]["criteria"] = ids;
    doc["config"]["reverse_R"] = v.reverse_R;
    doc["config"]["T"] = v.reverse_T;
    Json results = Json::array();
    bool all = true;
    for (const int id : ids) {
        const CriterionResult r = run_criterion(id, v);
        all = all && r.passed;
        results.push_back(to_json(r));
        out << (r.passed ? "PASS " : "FAIL ") << id << " " << r.name << "\n";
        out.flush();
    }
    doc["all_passed"] = all;
    doc["results"] = results;
    if (c.format == "csv") {
        std::string csv = csv_row({"id", "name", "passed", "measured"});
        for (const auto& r : results) {
            csv += csv_row({std::to_string(r["id"].get<int>()), r["name"].get<std::string>(),
                            r["passed"].get<bool>() ? "true" : "false", r["measured"].dump()});
        }
        write_file(fs::path(c.out) / "verify.csv", csv);
    } else {
        write_json(c, "verify", doc);
    }
    if (!all) {
        out << "verification failed:";
        for (const auto& r : results) {
            if (!r["passed"].get<bool>()) {
                out << " " << r["name"].get<std::string>();
            }
        }
        out << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_report(const Config& c, std::ostream& out) {
    if (c.inputs.empty()) {
        throw PreconditionError("report needs at least one --input file");
    }
    Json docs = Json::array();
    bool verification_failed = false;
    for (const auto& path : c.inputs) {
        std::ifstream f(path);
        if (!f) {
            throw PreconditionError("cannot read " + path);
        }
        Json j;
        try {
            j = Json::parse(f);
        } catch (const nlohmann::json::exception& e) {
            throw PreconditionError(path + " is not JSON: " + e.what());
        }
        if (j.contains("all_passed") && !j["all_passed"].get<bool>()) {
            verification_failed = true;
        }
        docs.push_back(Json{{"source", fs::path(path).filename().string()}, {"content", j}});
    }
    Json doc = envelope(c, "report", "");
    doc["documents"] = docs;
    doc["any_verification_failed"] = verification_failed;
    write_tree(c, "report", doc);
    out << "merged " << docs.size() << " document(s)\n";
    return kExitOk;
}

int cmd_exact(const Config& c, const std::string& op, std::ostream& out) {
    Json result;
    const WalkParams params(c.alpha);
    auto point = [](const std::string& s, const char* flag) {
        if (s.empty()) {
            throw PreconditionError(std::string(flag) + " is required");
        }
        return parse_point(s);
    };
    if (op == "shortest-path") {
        result = Json{{"probability", shortest_path_prob(point(c.x, "--x"), point(c.y, "--y"), params)}};
    } else if (op == "axis-absorption") {
        result = to_json(axis_absorption(point(c.x, "--x"), params, c.R, c.M));
    } else if (op == "cone-exit") {
        result = to_json(cone_exit(point(c.x, "--x"), c.R, c.T.value_or(kDefaultT)));
    } else if (op == "embedded-invariant") {
        if (c.chain != "entry" && c.chain != "exit") {
            throw PreconditionError("--chain must be entry or exit");
        }
        InvariantOptions opts;
        opts.tol = c.tol;
        result = to_json(embedded_invariant(c.chain == "entry" ? EmbeddedChain::Entry : EmbeddedChain::Exit, params,
                                            c.R, opts));
    } else if (op == "reversibility") {
        result = Json{{"residual", reversibility_residual(point(c.x, "--x"), point(c.y, "--y"), params, c.R)}};
    } else if (op == "reverse-sum") {
        const ReverseSumEstimate e = reverse_sum_extrapolated(point(c.x, "--x"), c.R, c.T.value_or(kDefaultT));
        result = Json{{"value", e.value}, {"coarse_value", e.coarse}, {"extrapolated", e.extrapolated},
                      {"deficit_estimate", e.extrapolated - e.value}};
    } else if (op == "binomial-point") {
        const BinomialPoint p = binomial_point(c.k, c.z);
        result = Json{{"exact", p.exact}, {"gaussian", p.gaussian}};
    } else if (op == "reflection") {
        result = Json{{"probability", reflection_stay_positive(c.from, c.to, c.k)}};
    } else if (op == "stay-positive") {
        result = Json{{"probability", stay_positive(c.u, c.m)},
                      {"closed_form", stay_positive_closed_form(c.u, c.m)}};
    } else if (op == "chernoff") {
        const auto [lo, hi] = chernoff_window(c.k, c.eps);
        result = Json{{"bound", chernoff_window_bound(c.k, c.eps)}, {"window", Json::array({lo, hi})}};
    } else if (op == "cone-exit-semianalytic") {
        SemiAnalyticOptions opts;
        opts.k_max = c.kmax;
        result = to_json(cone_exit_semianalytic(c.from, c.to, opts));
    } else if (op == "eta-tail") {
        result = to_json(eta_tail_semianalytic(c.from, c.k));
    } else {
        throw PreconditionError("unknown exact operation " + op);
    }
    Json doc = envelope(c, "exact", op);
    doc["config"]["arguments"] = Json{{"x", c.x}, {"y", c.y}, {"chain", c.chain}, {"k", c.k}, {"z", c.z},
                                      {"from", c.from}, {"to", c.to}, {"u", c.u}, {"m", c.m}, {"kmax", c.kmax},
                                      {"eps", c.eps}};
    doc["result"] = result;
    std::string name = "exact_" + op;
    std::replace(name.begin(), name.end(), '-', '_');
    write_tree(c, name, doc);
    // Short human summary: scalar fields only.
    for (const auto& [k, v] : result.items()) {
        if (v.is_number()) {
            out << k << " = " << (v.is_number_float() ? format_number(v.get<double>()) : v.dump()) << "\n";
        }
    }
    return kExitOk;
}

const std::vector<std::string> kExactOps = {"shortest-path", "axis-absorption", "cone-exit", "embedded-invariant",
                                            "reversibility", "reverse-sum", "binomial-point", "reflection",
                                            "stay-positive", "chernoff", "cone-exit-semianalytic", "eta-tail"};

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    std::string config_path;
    CLI::App app{"axiswalk: perturbed random walk laboratory", "axiswalk"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    CLI::App* simulate = app.add_subcommand("simulate", "run a replicated Monte Carlo campaign");
    CLI::App* exact = app.add_subcommand("exact", "run one exact-solver or asymptotics operation");
    CLI::App* constants = app.add_subcommand("constants", "compute the limit constants");
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    CLI::App* report = app.add_subcommand("report", "merge prior outputs into one document");

    for (CLI::App* sub : {simulate, exact, constants, verify, report}) {
        add_common(*sub, c);
        sub->add_option("--config", config_path, "JSON config file; flags override it");
    }
    add_randomized(*simulate, c);
    add_randomized(*verify, c);
    verify->add_option("--T", c.T, "time horizon for the reverse sum");
    verify->add_option("--criteria", c.criteria, "subset of criteria ids")->delimiter(',');
    constants->add_option("--tol", c.tol, "power-iteration tolerance");
    report->add_option("--input", c.inputs, "JSON artifact to merge")->required();

    std::string op;
    exact->add_option("operation", op, "operation name")->required()->check(CLI::IsMember(kExactOps));
    exact->add_option("--x", c.x, "site \"x1,x2\"");
    exact->add_option("--y", c.y, "site \"x1,x2\"");
    exact->add_option("--T", c.T, "time horizon");
    exact->add_option("--M", c.M, "survival horizon");
    exact->add_option("--tol", c.tol, "power-iteration tolerance");
    exact->add_option("--chain", c.chain, "entry or exit");
    exact->add_option("--k", c.k, "step count");
    exact->add_option("--z", c.z, "endpoint of the 1D walk");
    exact->add_option("--from", c.from, "1D start / first coordinate");
    exact->add_option("--to", c.to, "1D end / exit coordinate");
    exact->add_option("--u", c.u, "1D start for stay-positive");
    exact->add_option("--m", c.m, "steps for stay-positive");
    exact->add_option("--kmax", c.kmax, "k truncation (0 = 100 x^2)");
    exact->add_option("--eps", c.eps, "window half-width");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty()) {
            apply_config_file(config_path, c, *sub);
        }
        if (c.format != "json" && c.format != "csv") {
            throw PreconditionError("format must be json or csv");
        }
        c.jobs = std::max(1u, c.jobs);
        if (sub == simulate) return cmd_simulate(c, out);
        if (sub == exact) return cmd_exact(c, op, out);
        if (sub == constants) return cmd_constants(c, out);
        if (sub == verify) return cmd_verify(c, out);
        return cmd_report(c, out);
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

} // namespace axiswalk::cli
