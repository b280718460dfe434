// qsim1d: run built-in or user scenarios and write their space-time data.
//
//   qsim1d list [--user-dir DIR]
//   qsim1d run SCENARIO [--n N] [--epsilon E] [--frames F] [--substeps S] [--steps T]
//                       [--seed K] [--shots M] [--out DIR] [--format csv|json]
//                       [--oracle-check] [--record-timing] [--user-dir DIR]
//
// Exit codes: 0 success, 1 config error, 2 norm drift beyond tolerance, 3 I/O error.

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "qsim1d/errors.hpp"
#include "qsim1d/scenario.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 1, kInvariant = 2, kIo = 3 };

struct RunArgs {
  std::string scenario;
  std::optional<unsigned> n;
  std::optional<double> epsilon;
  std::optional<std::size_t> frames;
  std::optional<std::size_t> substeps;
  std::optional<std::size_t> steps;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> shots;
  std::string out;
  std::string format = "csv";
  bool oracle_check = false;
  bool record_timing = false;
};

std::optional<std::filesystem::path> user_dir_from(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv("QSIM1D_SCENARIO_DIR"); env && *env) {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

int run(const RunArgs& args, const std::optional<std::filesystem::path>& user_dir) {
  auto config = qsim1d::resolve_scenario(args.scenario, user_dir);
  if (args.n) config.n_qubits = *args.n;
  if (args.epsilon) config.epsilon = *args.epsilon;
  if (args.substeps) config.substeps = *args.substeps;
  if (args.frames) config.frames = *args.frames;
  if (args.steps) {
    if (args.frames) throw qsim1d::ConfigError("steps", "give either --steps or --frames");
    if (config.substeps == 0 || *args.steps % config.substeps != 0) {
      throw qsim1d::ConfigError("steps", "must be a multiple of substeps (" +
                                             std::to_string(config.substeps) + ")");
    }
    config.frames = *args.steps / config.substeps + 1;
  }
  if (args.seed) config.seed = *args.seed;
  if (args.shots) {
    config.shots = *args.shots;
    if (config.shots > 0 && !config.wants(qsim1d::Quantity::Samples)) {
      config.outputs.push_back(qsim1d::Quantity::Samples);
    }
  }
  qsim1d::validate(config);

  const auto format = qsim1d::parse_output_format(args.format);
  if (!format) throw qsim1d::ConfigError("format", "expected csv or json");

  std::filesystem::path out_dir = args.out;
  if (out_dir.empty()) {
    const char* env = std::getenv("QSIM1D_OUTPUT_DIR");
    out_dir = (env && *env) ? env : "qsim1d_out";
  }

  const auto result = qsim1d::run_scenario(config, {args.oracle_check});
  const auto written = qsim1d::emit(result, *format, out_dir, {args.record_timing});
  for (const auto& path : written) std::cout << path.string() << '\n';
  for (const auto& warning : result.metadata.warnings) std::cerr << "warning: " << warning << '\n';
  if (result.metadata.oracle_max_deviation) {
    std::printf("oracle max deviation: %.3e\n", *result.metadata.oracle_max_deviation);
  }
  if (!result.norm_ok()) {
    std::fprintf(stderr, "error: norm drift %.3e exceeds tolerance %.3e\n",
                 result.metadata.max_norm_drift, config.norm_tolerance);
    return kInvariant;
  }
  return kOk;
}

int list(const std::optional<std::filesystem::path>& user_dir) {
  for (const auto& entry : qsim1d::list_scenarios(user_dir)) {
    std::cout << entry.name << '\t' << entry.source << '\t';
    if (entry.error) {
      std::cout << "[parse error] " << *entry.error;
    } else {
      std::cout << entry.description;
    }
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gate-level simulation of 1D Schroedinger dynamics"};
  app.require_subcommand(1);
  std::string user_dir_flag;
  const std::string user_dir_help = "Directory of *.scn scenario files (default: $QSIM1D_SCENARIO_DIR)";

  auto* list_cmd = app.add_subcommand("list", "List built-in and user scenarios");
  list_cmd->add_option("--user-dir", user_dir_flag, user_dir_help);

  RunArgs args;
  auto* run_cmd = app.add_subcommand("run", "Run a scenario and write its data files");
  run_cmd->add_option("scenario", args.scenario, "Built-in name, user scenario name or .scn path")
      ->required();
  run_cmd->add_option("--user-dir", user_dir_flag, user_dir_help);
  run_cmd->add_option("--n", args.n, "Number of qubits");
  run_cmd->add_option("--epsilon", args.epsilon, "Trotter step");
  run_cmd->add_option("--frames", args.frames, "Number of recorded frames");
  run_cmd->add_option("--substeps", args.substeps, "Trotter steps between frames");
  run_cmd->add_option("--steps", args.steps, "Total Trotter steps (sets frames = steps/substeps + 1)");
  run_cmd->add_option("--seed", args.seed, "Sampler seed");
  run_cmd->add_option("--shots", args.shots, "Add a sampled histogram with this many shots per frame");
  run_cmd->add_option("--out", args.out, "Output directory (default: $QSIM1D_OUTPUT_DIR or ./qsim1d_out)");
  run_cmd->add_option("--format", args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_flag("--oracle-check", args.oracle_check,
                    "Run the FFT split-operator reference and report the max deviation");
  run_cmd->add_flag("--record-timing", args.record_timing,
                    "Store wall time in the metadata (outputs then differ between runs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    const auto user_dir = user_dir_from(user_dir_flag);
    if (list_cmd->parsed()) return list(user_dir);
    if (run_cmd->parsed()) return run(args, user_dir);
  } catch (const qsim1d::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const qsim1d::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const qsim1d::ResourceError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const qsim1d::DegenerateInputError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::logic_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  }
  return kOk;
}
