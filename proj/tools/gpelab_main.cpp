#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gpelab/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Pseudo-spectral Gross-Pitaevskii simulator and I-method verification lab"};
    std::string config_path;
    std::uint64_t seed = 0;
    std::string out_dir;
    int threads = 1;
    app.add_option("--config", config_path, "JSON run config")->required()->check(CLI::ExistingFile);
    auto* seed_opt = app.add_option("--seed", seed, "override the config seed");
    auto* out_opt = app.add_option("--out", out_dir, "override the config out_dir");
    app.add_option("--threads", threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : gpelab::kExitConfig;
    }

    std::ifstream in(config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    gpelab::RunConfig cfg;
    try {
        cfg = gpelab::parse_config(buf.str());
    } catch (const gpelab::ConfigError& e) {
        std::cerr << config_path << ": " << e.what() << "\n";
        return gpelab::kExitConfig;
    }
    if (*seed_opt) cfg.seed = seed;
    if (*out_opt) cfg.out_dir = out_dir;
    return gpelab::run(cfg, {threads, &std::cout, &std::cerr});
}
