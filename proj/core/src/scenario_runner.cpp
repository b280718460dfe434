#include <algorithm>
#include <chrono>
#include <cmath>

#include "qsim1d/errors.hpp"
#include "qsim1d/measurement.hpp"
#include "qsim1d/oracle.hpp"
#include "qsim1d/ramsey.hpp"
#include "qsim1d/scenario.hpp"

#ifndef QSIM1D_VERSION
#define QSIM1D_VERSION "unknown"
#endif

namespace qsim1d {

namespace {

EvolutionParams evolution_params(const ScenarioConfig& config) {
  EvolutionParams params;
  params.epsilon = config.epsilon;
  params.steps = config.total_steps();
  params.hbar = config.hbar;
  params.mass = config.mass;
  params.snapshot_stride = config.substeps;
  params.potential_route = config.potential_route;
  params.kinetic_route = config.kinetic_route;
  return params;
}

void record_frame(ScenarioResult& result, std::size_t f, const StateVector& state) {
  const auto& config = result.config;
  const auto amps = state.amplitudes();
  double total = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const double p = std::norm(amps[k]);
    total += p;
    if (auto it = result.fields.find(Quantity::Abs2); it != result.fields.end()) {
      it->second(f, k) = p;
    }
    if (auto it = result.fields.find(Quantity::Abs); it != result.fields.end()) {
      it->second(f, k) = std::abs(amps[k]);
    }
  }
  result.metadata.max_norm_drift = std::max(result.metadata.max_norm_drift, std::abs(total - 1.0));
  if (config.wants(Quantity::Samples)) {
    const auto record = sample(state, config.shots, config.seed + f);
    auto& field = result.fields.at(Quantity::Samples);
    std::copy(record.estimate.begin(), record.estimate.end(), field.row(f).begin());
  }
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& options) {
  validate(config);
  const auto started = std::chrono::steady_clock::now();

  ScenarioResult result;
  result.config = config;
  result.metadata.code_version = QSIM1D_VERSION;
  result.metadata.total_steps = config.total_steps();
  if (config.wants(Quantity::Samples)) result.metadata.sampler_rng = kSamplerRng;

  const SpatialGrid grid(config.n_qubits, config.half_width);
  result.x = grid.points();
  for (std::size_t f = 0; f < config.frames; ++f) result.times.push_back(config.frame_time(f));
  for (Quantity q : config.outputs) result.fields.emplace(q, Field(config.frames, grid.size()));

  auto prepared = prepare(config.packet, grid, config.hbar);
  result.metadata.tail_mass = prepared.tail_mass;
  result.metadata.norm_factor = prepared.norm_factor;
  result.metadata.warnings = prepared.warnings;

  const auto params = evolution_params(config);
  const TrotterStep step(config.potential, grid, params);
  const bool want_reim = config.wants(Quantity::Re2) || config.wants(Quantity::Im2);
  if (want_reim && !step.has_circuit()) {
    throw ConfigError(config.potential_route == DiagonalRoute::Direct ? "route.potential"
                                                                      : "route.kinetic",
                      "re2/im2 outputs need a gate-level route, not direct");
  }
  Circuit step_gates;
  if (step.has_circuit()) {
    step_gates = step.circuit();
    result.metadata.gates_per_step = step_gates.size();
  }

  std::optional<RamseyInterferometer> ramsey;
  if (want_reim) {
    ramsey.emplace(config.n_qubits);
    const auto amps = prepared.state.amplitudes();
    ramsey->append(Preparation{{amps.begin(), amps.end()}});
  }

  StateVector state = prepared.state;
  for (std::size_t f = 0; f < config.frames; ++f) {
    if (f > 0) {
      for (std::size_t s = 0; s < config.substeps; ++s) {
        step.apply(state);
        if (ramsey) ramsey->append(step_gates);
      }
    }
    record_frame(result, f, state);
    if (ramsey) {
      const auto outcome = ramsey->outcome();
      if (auto it = result.fields.find(Quantity::Re2); it != result.fields.end()) {
        std::copy(outcome.p0.begin(), outcome.p0.end(), it->second.row(f).begin());
      }
      if (auto it = result.fields.find(Quantity::Im2); it != result.fields.end()) {
        std::copy(outcome.p1.begin(), outcome.p1.end(), it->second.row(f).begin());
      }
    }
    result.states.push_back(state);
  }

  if (options.oracle_check) {
    const auto reference = oracle::split_operator_reference(prepared.state.amplitudes(),
                                                            config.potential, grid, params);
    double worst = 0.0;
    for (std::size_t f = 0; f < result.states.size() && f < reference.size(); ++f) {
      const auto amps = result.states[f].amplitudes();
      for (std::size_t k = 0; k < amps.size(); ++k) {
        worst = std::max(worst, std::abs(amps[k] - reference[f][k]));
      }
    }
    result.metadata.oracle_max_deviation = worst;
  }

  result.metadata.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace qsim1d
