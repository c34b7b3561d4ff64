#pragma once

#include <casimir/casimir.hpp>
#include <casimir/catalog.hpp>

#include <optional>
#include <string>
#include <vector>

namespace casimir::cli {

enum class Command { Eta, Sweep, Epsilon, Reflect, Asym, Figure };
enum class OutputFormat { Csv, Json };

const char* to_string(Command c);
std::optional<Command> parse_command(const std::string& s);
std::optional<OutputFormat> parse_format(const std::string& s);

/// Everything needed to execute one command. Lengths in m, frequencies in
/// rad/s, wavevectors in rad/m.
struct RunConfig {
    Command command = Command::Eta;
    ModelRegistry models;               // user models, tables included
    std::vector<std::string> model_ids; // epsilon / asym
    std::string mirror_a;               // specs; "@D" is replaced per thickness
    std::string mirror_b;
    std::vector<double> separations;
    std::vector<double> thicknesses;
    std::vector<double> omegas;
    std::vector<double> transverse_k;
    std::optional<double> phase_ratio;  // asym: c kappa / w for phase factor output
    std::optional<double> area;
    std::string figure;
    int points_per_decade = 50;
    QuadratureSpec quad;
    std::string output_path;            // empty = stdout
    OutputFormat format = OutputFormat::Csv;
    unsigned threads = 1;
};

struct ConfigError {
    int line = 0;       // 1-based, 0 when unknown
    std::string field;  // dotted path
    std::string message;
};

struct ConfigResult {
    std::optional<RunConfig> config;
    std::vector<ConfigError> errors;

    explicit operator bool() const { return config.has_value(); }
};

std::string format_error(const ConfigError& e);

/// Parses the YAML run description. Every problem found is reported, not
/// just the first. Relative table paths resolve against `base_dir`.
ConfigResult parse_config(const std::string& text, const std::string& base_dir = ".");

/// Checks cross-field constraints (ids resolve, required fields present).
/// Used by parse_config and by the flag front end.
void validate_config(const RunConfig& cfg, std::vector<ConfigError>& errors);

/// Applies CASIMIR_OUT and CASIMIR_THREADS from the environment.
void apply_environment(RunConfig& cfg);

/// n log-spaced points per decade covering [lo, hi], both ends included.
std::vector<double> log_space(double lo, double hi, int per_decade);

/// Mirror specs with "@D" substituted; one entry per thickness, or just the
/// raw specs when no thickness list is given.
std::vector<std::pair<std::string, std::string>> expand_mirrors(const RunConfig& cfg);

}  // namespace casimir::cli
