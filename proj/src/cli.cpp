#include "gpelab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include "gpelab/data.hpp"
#include "gpelab/dynamics.hpp"
#include "gpelab/errors.hpp"
#include "gpelab/estimates.hpp"
#include "gpelab/experiments.hpp"
#include "gpelab/ledger.hpp"
#include "gpelab/multiplier_verify.hpp"
#include "gpelab/snapshot_io.hpp"

namespace gpelab {

namespace fs = std::filesystem;

ConfigError::ConfigError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ": " + what : "config: " + what),
      line_(line) {}

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"simulate",  "almost-conservation", "strichartz",
                                                "bilinear",  "multiplier-verify",   "ledger"};
    return names;
}

Json default_params(const std::string& subcommand) {
    const double box = 16.0 * std::numbers::pi;
    if (subcommand == "simulate")
        return {{"dim", 1},          {"n", 256},          {"length", box},   {"dt", 1e-3},
                {"t_end", 1.0},      {"diagnostics_every", 1}, {"datum", "gaussian"},
                {"amplitude", 0.5},  {"width", 2.0},      {"s", 0.9},        {"N_list", Json::array()},
                {"dealias", true}};
    if (subcommand == "almost-conservation")
        return {{"dim", 1},       {"n", 1024},          {"length", box},
                {"s", 0.9},       {"N_list", {4, 8, 16, 32}}, {"window", 0.25},
                {"dt", 6.25e-5},  {"diagnostics_every", 10},  {"amplitude", 1.0},
                {"slope_gate", -0.5}};
    if (subcommand == "strichartz")
        return {{"q", 2.0},   {"r", 6.0},  {"centers", {4, 8, 16, 32}}, {"T", 0.5},
                {"n", 64},    {"length", box}, {"samples", 33}, {"seeds", 4}, {"slope_gate", 0.1}};
    if (subcommand == "bilinear")
        return {{"n", 64},
                {"length", 2.0 * std::numbers::pi},
                {"T", 0.5},
                {"seeds", 20},
                {"samples", 129},
                {"fixed_N1", 1.0},
                {"N2_list", {4, 6, 8, 12}},
                {"fixed_N2", 12.0},
                {"N1_list", {1, 2, 4}},
                {"N2_slope_range", {-0.65, -0.35}},
                {"N1_slope_range", {0.8, 1.2}}};
    if (subcommand == "multiplier-verify")
        return {{"N_list", {4, 8, 16, 32}}, {"samples", 100000}, {"s", 0.75},
                {"cap", 64.0},              {"slope_cap", 0.1},  {"exprs", Json::array()}};
    if (subcommand == "ledger") return {{"s_grid", {"3/4", "5/6", "9/10"}}};
    throw ConfigError(0, "unknown subcommand '" + subcommand + "'");
}

namespace {

// ---------------------------------------------------------------- parsing

int line_at(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Offset of the first `"key" :` at or after `from`, or npos.
std::size_t key_offset(const std::string& text, const std::string& key, std::size_t from) {
    const std::string quoted = "\"" + key + "\"";
    for (std::size_t p = text.find(quoted, from); p != std::string::npos; p = text.find(quoted, p + 1)) {
        std::size_t q = p + quoted.size();
        while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q]))) ++q;
        if (q < text.size() && text[q] == ':') return p;
    }
    return std::string::npos;
}

int key_line(const std::string& text, const std::string& key, std::size_t from = 0) {
    const auto p = key_offset(text, key, from);
    return p == std::string::npos ? 0 : line_at(text, p);
}

bool same_kind(const Json& def, const Json& v) {
    if (def.is_boolean()) return v.is_boolean();
    if (def.is_string()) return v.is_string();
    if (def.is_number_integer()) return v.is_number_integer();
    if (def.is_number()) return v.is_number();
    if (def.is_array()) return v.is_array();
    return false;
}

std::string kind_name(const Json& def) {
    if (def.is_boolean()) return "a boolean";
    if (def.is_string()) return "a string";
    if (def.is_number_integer()) return "an integer";
    if (def.is_number()) return "a number";
    return "an array";
}

Json resolve_params(const std::string& text, const std::string& sub, const Json& given, std::size_t params_at) {
    Json out = default_params(sub);
    if (!given.is_object()) throw ConfigError(line_at(text, params_at), "'params' must be an object");
    for (const auto& [key, value] : given.items()) {
        const int line = key_line(text, key, params_at);
        if (!out.contains(key)) throw ConfigError(line, "unknown field 'params." + key + "' for subcommand " + sub);
        const Json& def = out[key];
        if (!same_kind(def, value)) throw ConfigError(line, "'params." + key + "' must be " + kind_name(def));
        if (def.is_array()) {
            // Empty defaults carry no element type; exprs is the one list of labels.
            const bool strings = def.empty() ? key == "exprs" : def.front().is_string();
            for (const auto& e : value)
                if (strings ? !e.is_string() : !e.is_number())
                    throw ConfigError(line, "'params." + key + "' must hold " + (strings ? "strings" : "numbers"));
        }
        out[key] = value;
    }
    return out;
}

// ---------------------------------------------------------------- output helpers

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> numbers(const Json& a) {
    std::vector<double> v;
    for (const auto& e : a) v.push_back(e.get<double>());
    return v;
}

Json fit_json(const ExponentFit& f) {
    return {{"slope", f.slope}, {"intercept", f.intercept}, {"residual", f.residual}};
}

Json tuple_json(const FrequencyTuple& x) {
    Json a = Json::array();
    for (const auto& v : x) a.push_back({v[0], v[1], v[2]});
    return a;
}

struct Artifacts {
    fs::path dir;
    void write(const std::string& name, const std::string& contents) const { atomic_write(dir / name, contents); }
    void write_json(const std::string& name, const Json& j) const { write(name, j.dump(2) + "\n"); }
};

Grid grid_from(const Json& p, int dim_default = 3) {
    const int dim = p.contains("dim") ? p["dim"].get<int>() : dim_default;
    return Grid(dim, p["n"].get<int>(), p["length"].get<double>());
}

// ---------------------------------------------------------------- subcommands

int run_simulate(const RunConfig& cfg, const Artifacts& art, std::ostream& out) {
    const Json& p = cfg.params;
    const Grid grid = grid_from(p);
    const std::string datum = p["datum"].get<std::string>();
    const double amp = p["amplitude"].get<double>();
    Field u0(grid, Representation::Physical);
    if (datum == "gaussian")
        u0 = gaussian_datum(grid, amp, p["width"].get<double>());
    else if (datum == "rough")
        u0 = to_physical(Complex(amp, 0.0) * rough_datum(grid, p["s"].get<double>(), derive_seed(cfg.seed, 0)));
    else if (datum != "zero")
        throw ConfigError(0, "'params.datum' must be one of gaussian, rough, zero");

    EvolveConfig ec{grid, p["dt"].get<double>(), p["t_end"].get<double>(), p["diagnostics_every"].get<int>()};
    ec.dealias = p["dealias"].get<bool>();
    ec.keep_snapshots = false;
    std::vector<MultiplierSpec> specs;
    for (double N : numbers(p["N_list"])) specs.push_back({N, p["s"].get<double>()});

    Trajectory traj, partial;
    int code = kExitOk;
    Json summary;
    try {
        traj = evolve(u0, ec, specs, &partial);
    } catch (const BlowUp& e) {
        traj = std::move(partial);
        code = kExitNumerical;
        summary["blow_up_time"] = e.time();
        summary["error"] = e.what();
    }

    std::string csv = energy_csv_header() + "\n";
    for (const auto& r : traj.energy) csv += energy_csv_row(r) + "\n";
    art.write("energy.csv", csv);
    if (!specs.empty()) {
        std::string mcsv = energy_csv_header() + "\n";
        for (const auto& series : traj.modified)
            for (const auto& r : series) mcsv += energy_csv_row(r) + "\n";
        art.write("modified_energy.csv", mcsv);
    }

    summary["steps"] = ec.step_count();
    summary["samples"] = traj.times.size();
    summary["blew_up"] = code != kExitOk;
    double drift = 0.0;
    if (!traj.energy.empty())
        for (const auto& r : traj.energy) drift = std::max(drift, std::abs(r.total - traj.energy.front().total));
    summary["energy_drift"] = drift;
    bool gate = true;
    if (code == kExitOk && traj.times.size() >= 3) {
        const L2Audit a = l2_growth_audit(traj);
        summary["l2_audit"] = {{"derivative_margin", a.derivative_margin},
                               {"derivative_tolerance", a.derivative_tolerance},
                               {"derivative_violations", a.derivative_violations},
                               {"gronwall_margin", a.gronwall_margin},
                               {"gronwall_violations", a.gronwall_violations},
                               {"max_mass_rate", a.max_mass_rate},
                               {"passed", a.passed()}};
        gate = a.passed();
    }
    summary["gates"] = {{"l2_audit", gate}};
    art.write_json("summary.json", summary);
    out << "simulate: " << traj.times.size() << " reports, energy drift " << fmt(drift)
        << (code == kExitOk ? "" : " (blow-up, partial artifacts written)") << "\n";
    if (code != kExitOk) return code;
    return gate ? kExitOk : kExitGate;
}

int run_almost_conservation(const RunConfig& cfg, const Artifacts& art, std::ostream& out) {
    const Json& p = cfg.params;
    const Grid grid = grid_from(p);
    const double s = p["s"].get<double>();
    const Field u0 = Complex(p["amplitude"].get<double>(), 0.0) * rough_datum(grid, s, derive_seed(cfg.seed, 0));
    AlmostConservationOptions o;
    o.dt = p["dt"].get<double>();
    o.diagnostics_every = p["diagnostics_every"].get<int>();
    const auto res = almost_conservation_experiment(u0, s, numbers(p["N_list"]), p["window"].get<double>(), o);

    std::string csv = "N,increment,increment_window,increment_delta,delta,gradI_norm\n";
    Json rows = Json::array();
    for (const auto& r : res.rows) {
        csv += fmt(r.N) + "," + fmt(r.increment) + "," + fmt(r.increment_window) + "," + fmt(r.increment_delta) +
               "," + fmt(r.delta) + "," + fmt(r.gradI_norm) + "\n";
    }
    art.write("increments.csv", csv);
    const double gate_slope = p["slope_gate"].get<double>();
    const bool slope_ok = res.fit.slope <= gate_slope;
    Json summary = {{"fit", fit_json(res.fit)},
                    {"monotone", res.monotone},
                    {"energy_drift", res.energy_drift},
                    {"gates", {{"monotone", res.monotone}, {"slope", slope_ok}, {"slope_gate", gate_slope}}}};
    art.write_json("summary.json", summary);
    out << "almost-conservation: slope " << fmt(res.fit.slope) << (res.monotone ? ", monotone" : ", NOT monotone")
        << "\n";
    return (slope_ok && res.monotone) ? kExitOk : kExitGate;
}

int run_strichartz(const RunConfig& cfg, const Artifacts& art, std::ostream& out) {
    const Json& p = cfg.params;
    StrichartzSweepOptions o;
    o.n = p["n"].get<int>();
    o.length = p["length"].get<double>();
    o.samples = p["samples"].get<int>();
    o.seeds = p["seeds"].get<int>();
    o.seed = cfg.seed;
    const auto sw = strichartz_ratio_sweep(p["q"].get<double>(), p["r"].get<double>(), numbers(p["centers"]),
                                           p["T"].get<double>(), o);
    std::string csv = "center,ratio\n";
    for (std::size_t i = 0; i < sw.centers.size(); ++i) csv += fmt(sw.centers[i]) + "," + fmt(sw.ratios[i]) + "\n";
    art.write("ratios.csv", csv);
    const double gate = p["slope_gate"].get<double>();
    const bool ok = std::abs(sw.fit.slope) <= gate;
    art.write_json("summary.json", {{"fit", fit_json(sw.fit)}, {"gates", {{"slope", ok}, {"slope_gate", gate}}}});
    out << "strichartz: slope " << fmt(sw.fit.slope) << "\n";
    return ok ? kExitOk : kExitGate;
}

// Runs jobs[i]() for every i on up to `threads` workers; exceptions propagate.
template <class Job>
void parallel_for(std::size_t count, int threads, Job job) {
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(1, threads)), 1,
                                                        std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) job(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

int run_bilinear(const RunConfig& cfg, const Artifacts& art, std::ostream& out, int threads) {
    const Json& p = cfg.params;
    BilinearOptions o;
    o.n = p["n"].get<int>();
    o.length = p["length"].get<double>();
    o.samples = p["samples"].get<int>();
    o.seed = cfg.seed;
    const double T = p["T"].get<double>();
    const int seeds = p["seeds"].get<int>();

    // Distinct (N1, N2) pairs of both sweeps, in first-seen order.
    std::vector<std::pair<double, double>> pairs;
    auto add = [&](double a, double b) {
        if (std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) == pairs.end()) pairs.emplace_back(a, b);
    };
    const double fixed_N1 = p["fixed_N1"].get<double>(), fixed_N2 = p["fixed_N2"].get<double>();
    const auto N2_list = numbers(p["N2_list"]), N1_list = numbers(p["N1_list"]);
    for (double N2 : N2_list) add(fixed_N1, N2);
    for (double N1 : N1_list) add(N1, fixed_N2);

    std::vector<BilinearStat> stats(pairs.size());
    parallel_for(pairs.size(), threads,
                 [&](std::size_t i) { stats[i] = bilinear_ratio(pairs[i].first, pairs[i].second, seeds, T, o); });

    auto mean_of = [&](double a, double b) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i] == std::make_pair(a, b)) return stats[i].mean;
        return 0.0;
    };
    std::string csv = "N1,N2,seed,ratio\n";
    for (const auto& st : stats)
        for (std::size_t k = 0; k < st.ratios.size(); ++k)
            csv += fmt(st.N1) + "," + fmt(st.N2) + "," + std::to_string(k) + "," + fmt(st.ratios[k]) + "\n";
    art.write("ratios.csv", csv);

    std::vector<double> m2, m1;
    for (double N2 : N2_list) m2.push_back(mean_of(fixed_N1, N2));
    for (double N1 : N1_list) m1.push_back(mean_of(N1, fixed_N2));
    const ExponentFit f2 = fit_loglog(N2_list, m2), f1 = fit_loglog(N1_list, m1);
    const auto r2 = numbers(p["N2_slope_range"]), r1 = numbers(p["N1_slope_range"]);
    const bool ok2 = f2.slope >= r2.at(0) && f2.slope <= r2.at(1);
    const bool ok1 = f1.slope >= r1.at(0) && f1.slope <= r1.at(1);
    Json summary = {{"N2_fit", fit_json(f2)},
                    {"N1_fit", fit_json(f1)},
                    {"gates", {{"N2_slope", ok2}, {"N1_slope", ok1}, {"N2_slope_range", r2}, {"N1_slope_range", r1}}}};
    art.write_json("summary.json", summary);
    out << "bilinear: N2-slope " << fmt(f2.slope) << ", N1-slope " << fmt(f1.slope) << "\n";
    return (ok1 && ok2) ? kExitOk : kExitGate;
}

int run_multiplier_verify(const RunConfig& cfg, const Artifacts& art, std::ostream& out, int threads) {
    const Json& p = cfg.params;
    VerifyOptions o;
    o.s = p["s"].get<double>();
    o.cap = p["cap"].get<double>();
    o.slope_cap = p["slope_cap"].get<double>();
    o.threads = threads;
    const auto N_list = numbers(p["N_list"]);
    const int samples = p["samples"].get<int>();
    std::vector<std::string> only;
    for (const auto& e : p["exprs"]) only.push_back(e.get<std::string>());
    for (const auto& name : only) multiplier_expr(name);  // rejects unknown labels

    std::string csv = "expr,region,N,max_ratio,samples,singular_rejections,attempts\n";
    Json reports = Json::array();
    bool all_ok = true;
    std::uint64_t tag = 0;
    for (const auto& entry : multiplier_catalog()) {
        ++tag;
        if (!only.empty() && std::find(only.begin(), only.end(), entry.expr->label) == only.end()) continue;
        const VerifyReport r = verify_bound(*entry.expr, entry.claim, N_list, samples, derive_seed(cfg.seed, tag), o);
        Json perN = Json::array();
        for (const auto& q : r.per_N) {
            csv += r.expr + "," + r.region + "," + fmt(q.N) + "," + fmt(q.max_ratio) + "," + std::to_string(q.samples) +
                   "," + std::to_string(q.singular_rejections) + "," + std::to_string(q.attempts) + "\n";
            perN.push_back({{"N", q.N},
                            {"max_ratio", q.max_ratio},
                            {"witness", tuple_json(q.witness)},
                            {"samples", q.samples},
                            {"singular_rejections", q.singular_rejections}});
        }
        Json j = {{"expr", r.expr},   {"region", r.region},   {"max_ratio", r.max_ratio},
                  {"witness", tuple_json(r.witness)}, {"witness_N", r.witness_N},
                  {"slope", r.slope}, {"passed", r.passed},    {"per_N", perN}};
        if (!r.note.empty()) j["note"] = r.note;
        reports.push_back(j);
        all_ok = all_ok && r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.expr << " " << r.region << ": max_ratio " << fmt(r.max_ratio)
            << ", N-slope " << fmt(r.slope);
        if (!r.passed) out << ", witness " << tuple_json(r.witness).dump() << " at N = " << fmt(r.witness_N);
        if (!r.note.empty()) out << " [" << r.note << "]";
        out << "\n";
    }
    art.write("bounds.csv", csv);
    art.write_json("summary.json", {{"s", o.s},
                                    {"cap", o.cap},
                                    {"slope_cap", o.slope_cap},
                                    {"reports", reports},
                                    {"gates", {{"all_bounds", all_ok}}}});
    return all_ok ? kExitOk : kExitGate;
}

int run_ledger(const RunConfig& cfg, const Artifacts& art, std::ostream& out) {
    std::string csv = "s,inc0,inc1,inc2,inc3,dominant_index,dominant_exponent,step_exponent,energy_exponent,gwp,slack\n";
    Json rows = Json::array();
    char line[256];
    std::snprintf(line, sizeof line, "%-8s %-8s %-8s %-8s %-8s %-4s %-8s %-8s %-8s %-6s %-8s\n", "s", "inc0", "inc1",
                  "inc2", "inc3", "dom", "dom_exp", "step", "energy", "gwp", "slack");
    out << line;
    for (const auto& e : cfg.params["s_grid"]) {
        const Rational s = parse_rational(e.get<std::string>());
        const ExponentLedger L = make_ledger(s);
        const DominantTerm d = dominant_increment(s);
        const GwpVerdict v = gwp_condition(s);
        std::vector<std::string> cols{to_string(s)};
        for (const auto& inc : L.increments) cols.push_back(to_string(inc));
        cols.insert(cols.end(), {std::to_string(d.index), to_string(d.exponent), to_string(L.step_exponent),
                                 to_string(L.energy_exponent), v.holds ? "true" : "false", to_string(v.slack)});
        for (std::size_t i = 0; i < cols.size(); ++i) csv += cols[i] + (i + 1 < cols.size() ? "," : "\n");
        std::snprintf(line, sizeof line, "%-8s %-8s %-8s %-8s %-8s %-4s %-8s %-8s %-8s %-6s %-8s\n", cols[0].c_str(),
                      cols[1].c_str(), cols[2].c_str(), cols[3].c_str(), cols[4].c_str(), cols[5].c_str(),
                      cols[6].c_str(), cols[7].c_str(), cols[8].c_str(), cols[9].c_str(), cols[10].c_str());
        out << line;
        rows.push_back({{"s", cols[0]}, {"dominant_index", d.index}, {"gwp", v.holds}, {"slack", cols[10]}});
    }
    const ThresholdSearch t = gwp_threshold();
    art.write("ledger.csv", csv);
    art.write_json("summary.json", {{"rows", rows},
                                    {"threshold", {{"left", to_string(t.left)}, {"right", to_string(t.right)},
                                                   {"iterations", t.iterations}}}});
    out << "gwp threshold: " << to_string(t.left) << "\n";
    return kExitOk;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(line_at(text, e.byte == 0 ? 0 : e.byte - 1), std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError(1, "top level must be an object");

    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        const int line = key_line(text, key);
        if (key == "subcommand") {
            if (!value.is_string()) throw ConfigError(line, "'subcommand' must be a string");
            cfg.subcommand = value.get<std::string>();
            const auto& names = subcommands();
            if (std::find(names.begin(), names.end(), cfg.subcommand) == names.end())
                throw ConfigError(line, "unknown subcommand '" + cfg.subcommand + "'");
        } else if (key == "seed") {
            if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0))
                throw ConfigError(line, "'seed' must be a non-negative 64-bit integer");
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "out_dir") {
            if (!value.is_string()) throw ConfigError(line, "'out_dir' must be a string");
            cfg.out_dir = value.get<std::string>();
        } else if (key != "params") {
            throw ConfigError(line, "unknown field '" + key + "'");
        }
    }
    if (cfg.subcommand.empty()) throw ConfigError(0, "missing required field 'subcommand'");
    const std::size_t at = key_offset(text, "params", 0);
    cfg.params = resolve_params(text, cfg.subcommand, j.contains("params") ? j["params"] : Json::object(),
                                at == std::string::npos ? 0 : at);
    return cfg;
}

std::string dump_config(const RunConfig& cfg) {
    const Json j = {{"subcommand", cfg.subcommand}, {"seed", cfg.seed}, {"out_dir", cfg.out_dir}, {"params", cfg.params}};
    return j.dump(2) + "\n";
}

int run(const RunConfig& cfg, const RunOptions& opts) {
    std::ostream& out = opts.out ? *opts.out : std::cout;
    std::ostream& err = opts.err ? *opts.err : std::cerr;
    try {
        const Artifacts art{fs::path(cfg.out_dir)};
        art.write("manifest.json", dump_config(cfg));
        const std::string& sub = cfg.subcommand;
        if (sub == "simulate") return run_simulate(cfg, art, out);
        if (sub == "almost-conservation") return run_almost_conservation(cfg, art, out);
        if (sub == "strichartz") return run_strichartz(cfg, art, out);
        if (sub == "bilinear") return run_bilinear(cfg, art, out, opts.threads);
        if (sub == "multiplier-verify") return run_multiplier_verify(cfg, art, out, opts.threads);
        if (sub == "ledger") return run_ledger(cfg, art, out);
        err << "error: unknown subcommand '" << sub << "'\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const BlowUp& e) {
        err << "error: blow-up at t = " << e.time() << ": " << e.what() << "\n";
        return kExitNumerical;
    } catch (const DomainError& e) {
        err << "error: invalid parameters: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ContractViolation& e) {
        err << "error: invalid parameters: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace gpelab
