// Acceptance gates 1-10. One "criterion K: PASS|FAIL (detail)" line each;
// exit status is nonzero if any gate fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gpelab/cli.hpp"
#include "gpelab/data.hpp"
#include "gpelab/experiments.hpp"
#include "gpelab/estimates.hpp"
#include "gpelab/ledger.hpp"
#include "gpelab/spectral.hpp"
#include "gpelab/step_law.hpp"

using namespace gpelab;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;
const fs::path kRoot = fs::current_path() / "acceptance_runs";

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct CliRun {
    RunConfig cfg;
    int code = -1;
    std::string out;
    double seconds = 0.0;
    Json summary;
    fs::path dir() const { return cfg.out_dir; }
};

std::vector<CliRun> g_runs;  // every CLI run, replayed by criterion 10

CliRun run_cli(const std::string& name, const std::string& config) {
    CliRun r;
    r.cfg = parse_config(config);
    r.cfg.out_dir = (kRoot / name).string();
    fs::remove_all(r.cfg.out_dir);
    std::ostringstream out, err;
    const Clock c;
    r.code = run(r.cfg, {1, &out, &err});
    r.seconds = c.seconds();
    r.out = out.str() + err.str();
    if (fs::exists(r.dir() / "summary.json")) r.summary = Json::parse(slurp(r.dir() / "summary.json"));
    g_runs.push_back(r);
    return r;
}

// Last row of an energy CSV: relative drift |E(T) - E(0)| / E(0).
double final_drift(const fs::path& csv) {
    std::istringstream in(slurp(csv));
    std::string line, first, last;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (first.empty()) first = line;
        last = line;
    }
    auto total = [](const std::string& row) {
        std::istringstream s(row);
        std::string cell;
        for (int i = 0; i < 4; ++i) std::getline(s, cell, ',');
        return std::stod(cell);
    };
    return std::abs(total(last) - total(first)) / total(first);
}

int g_failures = 0;

void report(int k, bool pass, const std::string& detail) {
    std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << " (" << detail << ")" << std::endl;
    if (!pass) ++g_failures;
}

void guarded(int k, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(k, false, std::string("exception: ") + e.what());
    }
}

// ------------------------------------------------------------------ criteria

void spectral_identities() {
    const Clock c;
    double worst_trip = 0.0, worst_parseval = 0.0;
    const std::vector<std::pair<int, int>> shapes{{1, 256}, {2, 128}, {3, 32}};
    for (const auto& [d, n] : shapes) {
        const Grid g(d, n, 2.0 * pi);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(d)));
            Field f(g, Representation::Physical);
            for (std::size_t i = 0; i < g.size(); ++i) f[i] = Complex(rng.normal(), rng.normal());
            const Field F = forward_transform(f);
            const Field back = inverse_transform(F);
            double diff = 0.0, ref = 0.0, phys = 0.0, spec = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                diff = std::max(diff, std::abs(back[i] - f[i]));
                ref = std::max(ref, std::abs(f[i]));
                phys += std::norm(f[i]);
                spec += std::norm(F[i]);
            }
            phys *= g.cell_volume();
            worst_trip = std::max(worst_trip, diff / ref);
            worst_parseval = std::max(worst_parseval, std::abs(phys - spec) / phys);
        }
    }
    const double t = c.seconds();
    report(1, worst_trip <= 1e-12 && worst_parseval <= 1e-12 && t < 30.0,
           "round trip " + num(worst_trip) + ", Parseval " + num(worst_parseval) + ", " + num(t) + " s");
}

void energy_and_l2() {
    const char* base = R"({"subcommand": "simulate", "params": {"dim": 1, "n": 256, "datum": "gaussian",
                         "amplitude": 0.5, "width": 2, "t_end": 1, "dt": %s}})";
    char cfg[512];
    const Clock c;
    std::snprintf(cfg, sizeof cfg, base, "1e-3");
    const CliRun coarse = run_cli("simulate_dt1e-3", cfg);
    std::snprintf(cfg, sizeof cfg, base, "5e-4");
    const CliRun fine = run_cli("simulate_dt5e-4", cfg);
    const double t = c.seconds();

    guarded(2, [&] {
        const double a = final_drift(coarse.dir() / "energy.csv"), b = final_drift(fine.dir() / "energy.csv");
        const double ratio = a / b;
        report(2, coarse.code == kExitOk && fine.code == kExitOk && ratio >= 3.4 && ratio <= 4.6 && t < 60.0,
               "drift " + num(a) + " / " + num(b) + " = ratio " + num(ratio) + ", " + num(t) + " s");
    });
    guarded(3, [&] {
        const Json& a = coarse.summary.at("l2_audit");
        const bool pass = a.at("passed").get<bool>() && a.at("derivative_violations") == 0 &&
                          a.at("gronwall_violations") == 0;
        report(3, pass,
               "derivative margin " + num(a.at("derivative_margin")) + " (tolerance " +
                   num(a.at("derivative_tolerance")) + "), Gronwall margin " + num(a.at("gronwall_margin")) +
                   ", violations " + std::to_string(a.at("derivative_violations").get<int>()) + "+" +
                   std::to_string(a.at("gronwall_violations").get<int>()));
    });
}

void step_law() {
    bool exact = true;
    double worst = 0.0;
    for (const char* text : {"3/4", "5/6", "9/10"}) {
        const Rational s = parse_rational(text);
        exact = exact && delta_exponent(s, 2 * (1 - s)) == -4 * (1 - s);
        const double sd = static_cast<double>(s);
        for (double N : {4.0, 16.0, 64.0}) {
            const double d = delta_step({N, sd, std::pow(N, 2.0 * (1.0 - sd))});
            worst = std::max(worst, std::abs(d / std::pow(N, -4.0 * (1.0 - sd)) - 1.0));
        }
    }
    report(4, exact && worst <= 1e-12,
           std::string("exponent identity ") + (exact ? "exact" : "WRONG") + ", floating relative error " + num(worst));
}

void bilinear() {
    const CliRun r = run_cli("bilinear", R"({"subcommand": "bilinear"})");
    const double a = r.summary.at("N2_fit").at("slope"), b = r.summary.at("N1_fit").at("slope");
    report(5, r.code == kExitOk && a >= -0.65 && a <= -0.35 && b >= 0.8 && b <= 1.2 && r.seconds < 600.0,
           "N2-slope " + num(a) + ", N1-slope " + num(b) + ", " + num(r.seconds) + " s");
}

void strichartz() {
    const bool adm = strichartz_admissible(2.0, 6.0) && strichartz_admissible(kInfinity, 2.0) &&
                     !strichartz_admissible(4.0, 4.0);
    const CliRun r = run_cli("strichartz", R"({"subcommand": "strichartz", "params": {"q": 2, "r": 6,
                             "centers": [4, 8, 16, 32]}})");
    const double slope = r.summary.at("fit").at("slope");
    report(6, adm && r.code == kExitOk && std::abs(slope) <= 0.1,
           std::string("admissibility ") + (adm ? "exact" : "WRONG") + ", slope " + num(slope));
}

void multipliers() {
    const CliRun r = run_cli("multiplier_verify", R"({"subcommand": "multiplier-verify", "params": {
                             "N_list": [4, 8, 16, 32], "samples": 100000, "cap": 64, "slope_cap": 0.1}})");
    int passed = 0, total = 0;
    double worst = 0.0, worst_slope = -kInfinity;
    for (const auto& rep : r.summary.at("reports")) {
        ++total;
        passed += rep.at("passed").get<bool>();
        worst = std::max(worst, rep.at("max_ratio").get<double>());
        worst_slope = std::max(worst_slope, rep.at("slope").get<double>());
    }
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);)
        if (line.starts_with("FAIL")) std::cout << "  " << line << "\n";
    report(7, r.code == kExitOk && total > 0 && passed == total,
           std::to_string(passed) + "/" + std::to_string(total) + " bounds, max ratio " + num(worst) +
               ", max N-slope " + num(worst_slope) + ", " + num(r.seconds) + " s");
}

void almost_conservation() {
    const CliRun r = run_cli("almost_conservation", R"({"subcommand": "almost-conservation", "params": {
                             "dim": 1, "n": 1024, "s": 0.9, "N_list": [4, 8, 16, 32], "window": 0.25}})");
    const double slope = r.summary.at("fit").at("slope");
    const bool monotone = r.summary.at("monotone");

    // Control: every lattice frequency is <= 4, so I_N is the identity for all N.
    const Grid g(1, 1024, 256.0 * pi);
    AlmostConservationOptions o;
    o.dt = 1e-3;
    o.diagnostics_every = 5;
    const auto ctl = almost_conservation_experiment(gaussian_datum(g, 0.5, 8.0), 0.9, {4, 8, 16, 32}, 0.25, o);
    double spread = 0.0;
    for (const auto& row : ctl.rows) spread = std::max(spread, std::abs(row.increment - ctl.rows[0].increment));
    report(8, r.code == kExitOk && monotone && slope <= -0.5 && g.max_frequency() <= 4.0 && spread <= 1e-10,
           std::string(monotone ? "strictly decreasing" : "NOT decreasing") + ", slope " + num(slope) +
               ", control spread " + num(spread));
}

void ledger() {
    const CliRun r = run_cli("ledger", R"({"subcommand": "ledger"})");
    const ThresholdSearch t = gwp_threshold();
    int dominated = 0;
    const int points = 10000;
    for (int k = 1; k <= points; ++k) {
        const Rational s = Rational(1, 2) + Rational(k, 2 * (points + 1));
        const ExponentLedger L = make_ledger(s);
        bool first = dominant_increment(s).index == 0;
        for (std::size_t i = 1; i < L.increments.size(); ++i) first = first && L.increments[0] >= L.increments[i];
        dominated += first;
    }
    report(9, r.code == kExitOk && t.left == Rational(5, 6) && dominated == points,
           "threshold " + to_string(t.left) + ", first term dominant on " + std::to_string(dominated) + "/" +
               std::to_string(points) + " points");
}

void determinism() {
    int identical = 0, files = 0;
    std::vector<std::string> mismatched;
    for (const auto& r : g_runs) {
        std::map<std::string, std::string> before;
        for (const auto& e : fs::directory_iterator(r.dir())) before[e.path().filename().string()] = slurp(e.path());
        std::ostringstream out, err;
        run(r.cfg, {1, &out, &err});
        bool same = true;
        for (const auto& [name, bytes] : before) {
            ++files;
            if (slurp(r.dir() / name) != bytes) {
                same = false;
                mismatched.push_back(r.cfg.subcommand + "/" + name);
            }
        }
        identical += same;
    }
    std::string detail = std::to_string(identical) + "/" + std::to_string(g_runs.size()) + " runs, " +
                         std::to_string(files) + " artifacts byte-identical on repeat";
    for (const auto& m : mismatched) detail += "; differs: " + m;
    report(10, identical == static_cast<int>(g_runs.size()) && !g_runs.empty(), detail);
}

}  // namespace

int main() {
    fs::create_directories(kRoot);
    guarded(1, spectral_identities);
    energy_and_l2();
    guarded(4, step_law);
    guarded(5, bilinear);
    guarded(6, strichartz);
    guarded(7, multipliers);
    guarded(8, almost_conservation);
    guarded(9, ledger);
    guarded(10, determinism);
    return g_failures == 0 ? 0 : 1;
}
