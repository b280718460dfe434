#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsim1d/evolution.hpp"
#include "qsim1d/field.hpp"
#include "qsim1d/wavepacket.hpp"

namespace qsim1d {

/// Per-frame quantities a scenario can record.
enum class Quantity { Abs2, Re2, Im2, Abs, Samples };

std::string_view quantity_name(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);

/**
 * A runnable scene: grid, potential, initial packet and time stepping.
 *
 * Row f of every output is the state after f * substeps Trotter steps,
 * f = 0..frames-1, so frames = 1 is just the prepared state.
 */
struct ScenarioConfig {
  std::string name;
  std::string description;
  /// Hand-picked values meant to show a qualitative behaviour, not measured ones.
  bool reconstructed = false;

  unsigned n_qubits = 6;
  double half_width = 10.0;
  double hbar = 1.0;
  double mass = 1.0;
  Potential potential;
  WavepacketSpec packet = Gaussian{};

  double epsilon = 0.01;
  std::size_t frames = 40;
  std::size_t substeps = 1;
  DiagonalRoute potential_route = DiagonalRoute::Auto;
  DiagonalRoute kinetic_route = DiagonalRoute::Auto;

  std::vector<Quantity> outputs{Quantity::Abs2};
  std::size_t shots = 0;
  std::uint64_t seed = 1;

  /// Allowed | sum_k |c_k|^2 - 1 | per frame before a run counts as an invariant violation.
  double norm_tolerance = 1e-8;

  /// "builtin" or the file the config came from.
  std::string source = "<string>";

  std::size_t total_steps() const noexcept { return (frames - 1) * substeps; }
  double frame_time(std::size_t f) const noexcept {
    return static_cast<double>(f * substeps) * epsilon;
  }
  bool wants(Quantity q) const;
};

/// Parses the key = value scenario format. Errors carry the offending key as field().
ScenarioConfig parse_scenario(std::string_view text, std::string_view source = "<string>");
ScenarioConfig load_scenario_file(const std::filesystem::path& path);

/// Throws ConfigError if a value is out of range.
void validate(const ScenarioConfig& config);

std::vector<std::string> builtin_scenario_names();
std::string_view builtin_scenario_text(std::string_view name);
ScenarioConfig builtin_scenario(std::string_view name);

/// Extension of user scenario files.
inline constexpr std::string_view kScenarioExtension = ".scn";

struct ScenarioEntry {
  std::string name;
  std::string description;
  std::string source;
  /// Set when a user file fails to parse; the entry is still listed.
  std::optional<std::string> error;
};

/// Built-ins followed by every *.scn file in `user_dir`, sorted by file name.
std::vector<ScenarioEntry> list_scenarios(
    const std::optional<std::filesystem::path>& user_dir = std::nullopt);

/// A built-in name, a scenario name in `user_dir`, or a path to a .scn file.
ScenarioConfig resolve_scenario(std::string_view name_or_path,
                                const std::optional<std::filesystem::path>& user_dir = std::nullopt);

struct RunOptions {
  /// Also run the FFT split-operator reference and record the largest deviation.
  bool oracle_check = false;
};

struct RunMetadata {
  std::string code_version;
  double wall_time_s = 0.0;
  double max_norm_drift = 0.0;
  double tail_mass = 0.0;
  double norm_factor = 1.0;
  std::size_t total_steps = 0;
  std::size_t gates_per_step = 0;
  std::string sampler_rng;
  std::optional<double> oracle_max_deviation;
  std::vector<std::string> warnings;
};

struct ScenarioResult {
  ScenarioConfig config;
  std::vector<double> times;
  std::vector<double> x;
  std::map<Quantity, Field> fields;
  /// The simulated state at every frame.
  std::vector<StateVector> states;
  RunMetadata metadata;

  bool norm_ok() const noexcept { return metadata.max_norm_drift <= config.norm_tolerance; }
};

ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct EmitOptions {
  /// Adds wall-clock time to the metadata file, which makes it differ between runs.
  bool record_timing = false;
};

/**
 * Writes the result into `dir` (created if missing):
 *   csv:  <name>_<quantity>.csv, long format with header "t,x,value"
 *   json: <name>.json with the config echo and every matrix
 * plus <name>.meta.json in both cases. Returns the written paths.
 * Throws IoError when the directory cannot be written.
 */
std::vector<std::filesystem::path> emit(const ScenarioResult& result, OutputFormat format,
                                        const std::filesystem::path& dir,
                                        const EmitOptions& options = {});

std::string to_csv(const ScenarioResult& result, Quantity quantity);
std::string to_json(const ScenarioResult& result);
std::string metadata_json(const ScenarioResult& result, const EmitOptions& options = {});

/// Matrices read back from the json format.
struct ParsedOutput {
  std::string name;
  std::vector<double> times;
  std::vector<double> x;
  std::map<Quantity, Field> fields;
};

ParsedOutput parse_json_output(std::string_view text);

}  // namespace qsim1d
