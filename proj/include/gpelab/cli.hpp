#pragma once
//
// Batch entry point: a JSON run config
//
//     {"subcommand": "...", "seed": 1, "out_dir": "out", "params": {...}}
//
// is validated against the subcommand schema, executed, and its artifacts
// (manifest.json, a CSV, summary.json) are written atomically to out_dir.
//
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace gpelab {

using Json = nlohmann::ordered_json;

/// Schema violation; the message carries the 1-based line of the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

struct RunConfig {
    std::string subcommand;
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    Json params = Json::object();  // fully resolved: defaults filled in

    bool operator==(const RunConfig&) const = default;
};

const std::vector<std::string>& subcommands();

/// Default parameter object for a subcommand; unknown subcommand -> ConfigError.
Json default_params(const std::string& subcommand);

/// Parses and validates; unknown fields and type mismatches are rejected.
RunConfig parse_config(const std::string& text);

/// The manifest text. parse_config(dump_config(c)) == c.
std::string dump_config(const RunConfig& cfg);

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3, kExitGate = 4 };

struct RunOptions {
    int threads = 1;
    std::ostream* out = nullptr;  // progress and tables; defaults to std::cout
    std::ostream* err = nullptr;  // diagnostics; defaults to std::cerr
};

/// Executes the run and returns the process exit code.
int run(const RunConfig& cfg, const RunOptions& opts = {});

}  // namespace gpelab
