#pragma once

#include <optional>
#include <vector>

#include "qsim1d/diagonal.hpp"
#include "qsim1d/grid.hpp"
#include "qsim1d/potential.hpp"
#include "qsim1d/qft.hpp"

namespace qsim1d {

/// How a diagonal factor of the Trotter step is realized.
enum class DiagonalRoute {
  Auto,            ///< Quadratic where the phase is quadratic, GenericCircuit otherwise
  Direct,          ///< multiply amplitudes by a phase table (no gate form)
  GenericCircuit,  ///< 2^{n-1} multi-controlled phase pairs
  Quadratic,       ///< n^2 factors; harmonic potential or kinetic energy only
};

struct EvolutionParams {
  double epsilon = 0.01;  ///< Trotter step
  std::size_t steps = 0;
  double hbar = 1.0;
  double mass = 1.0;
  /// Snapshot every `snapshot_stride` steps; the initial and final states are always kept.
  std::size_t snapshot_stride = 1;
  DiagonalRoute potential_route = DiagonalRoute::Auto;
  DiagonalRoute kinetic_route = DiagonalRoute::Auto;
  QftReversal reversal = QftReversal::IndexRelabel;
};

void validate(const EvolutionParams& params);

/// f(k) = -V(x_k) eps / hbar.
std::vector<double> potential_phases(const Potential& potential, const SpatialGrid& grid,
                                     const EvolutionParams& params);

/// f(l) = -(p_l + hbar phi / L)^2 eps / (2 m hbar), indexed by the momentum label l.
std::vector<double> kinetic_phases(const SpatialGrid& grid, const EvolutionParams& params,
                                   double twist = 0.0);

/// e^{-i V eps / hbar} for V = m w^2 x^2 / 2 on the grid, as a quadratic bit form.
QuadraticPhaseSpec harmonic_phase_spec(const Harmonic& harmonic, const SpatialGrid& grid,
                                       const EvolutionParams& params);

/// e^{-i (p + hbar phi / L)^2 eps / 2 m hbar} in the momentum labels, as a quadratic bit form.
QuadraticPhaseSpec kinetic_phase_spec(const SpatialGrid& grid, const EvolutionParams& params,
                                      double twist = 0.0);

/// e^{i phi x_k / L}: the gauge factor relating the periodic and twisted frames.
LinearPhaseSpec twist_gauge_spec(const SpatialGrid& grid, double twist);

/// Gate form of e^{-i V eps / hbar}. Throws ConstructionError for the Direct route.
Circuit build_potential_circuit(const Potential& potential, const SpatialGrid& grid,
                                const EvolutionParams& params);

/// Gate form of F^{-1} e^{-i p^2 eps / 2 m hbar} F, including the twist gauge factors.
Circuit build_kinetic_circuit(const SpatialGrid& grid, const EvolutionParams& params,
                              double twist = 0.0);

void potential_step(StateVector& state, const Potential& potential, const SpatialGrid& grid,
                    const EvolutionParams& params);

void kinetic_step(StateVector& state, const SpatialGrid& grid, const EvolutionParams& params,
                  double twist = 0.0);

/**
 * One Trotter step, potential phase first and kinetic second, with the
 * diagonal factors prebuilt once.
 */
class TrotterStep {
 public:
  TrotterStep(const Potential& potential, const SpatialGrid& grid, const EvolutionParams& params);

  void apply(StateVector& state) const;

  /// True unless a Direct route was requested.
  bool has_circuit() const noexcept { return potential_gates_ && kinetic_gates_; }

  /// Full gate list of one step. Throws ConstructionError when !has_circuit().
  Circuit circuit() const;

 private:
  SpatialGrid grid_;
  EvolutionParams params_;
  double twist_;
  std::optional<Circuit> potential_gates_;
  std::optional<Circuit> kinetic_gates_;
  std::vector<double> potential_table_;
};

/// Applies params.steps Trotter steps to `initial`; element 0 is the initial state.
std::vector<StateVector> evolve(const StateVector& initial, const Potential& potential,
                                const SpatialGrid& grid, const EvolutionParams& params);

}  // namespace qsim1d
