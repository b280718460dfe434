#include "qsim1d/evolution.hpp"

#include <cmath>
#include <numbers>

#include "qsim1d/errors.hpp"

namespace qsim1d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Circuit concat(Circuit a, const Circuit& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Circuit kinetic_diagonal_gates(const SpatialGrid& grid, const EvolutionParams& params,
                               double twist) {
  switch (params.kinetic_route) {
    case DiagonalRoute::Auto:
    case DiagonalRoute::Quadratic:
      return build_quadratic_phase_circuit(kinetic_phase_spec(grid, params, twist)).flatten();
    case DiagonalRoute::GenericCircuit: {
      const auto table = kinetic_phases(grid, params, twist);
      return build_generic_diagonal_circuit([&](Index l) { return table[l]; },
                                            grid.num_qubits());
    }
    case DiagonalRoute::Direct:
      break;
  }
  throw ConstructionError("direct kinetic route has no gate form");
}

}  // namespace

void validate(const EvolutionParams& params) {
  if (!(params.epsilon >= 0.0) || !std::isfinite(params.epsilon)) {
    throw DomainError("epsilon must be finite and non-negative");
  }
  if (!(params.hbar > 0.0)) throw DomainError("hbar must be positive");
  if (!(params.mass > 0.0)) throw DomainError("mass must be positive");
  if (params.snapshot_stride == 0) throw DomainError("snapshot_stride must be >= 1");
}

std::vector<double> potential_phases(const Potential& potential, const SpatialGrid& grid,
                                     const EvolutionParams& params) {
  std::vector<double> phases(grid.size());
  for (Index k = 0; k < phases.size(); ++k) {
    phases[k] = -potential(grid.x(k)) * params.epsilon / params.hbar;
  }
  return phases;
}

std::vector<double> kinetic_phases(const SpatialGrid& grid, const EvolutionParams& params,
                                   double twist) {
  const MomentumGrid momenta(grid, params.hbar);
  const double shift = params.hbar * twist / grid.length();
  std::vector<double> phases(grid.size());
  for (Index l = 0; l < phases.size(); ++l) {
    const double p = momenta.p(l) + shift;
    phases[l] = -p * p * params.epsilon / (2.0 * params.mass * params.hbar);
  }
  return phases;
}

QuadraticPhaseSpec harmonic_phase_spec(const Harmonic& harmonic, const SpatialGrid& grid,
                                       const EvolutionParams& params) {
  const unsigned n = grid.num_qubits();
  const double alpha = grid.delta();
  QuadraticPhaseSpec spec;
  spec.n_qubits = n;
  spec.alpha = alpha;
  spec.beta = (-grid.half_width() + 0.5 * grid.delta()) / (alpha * n);
  spec.gamma = harmonic.mass * harmonic.omega * harmonic.omega * alpha * alpha * params.epsilon /
               (2.0 * params.hbar);
  return spec;
}

QuadraticPhaseSpec kinetic_phase_spec(const SpatialGrid& grid, const EvolutionParams& params,
                                      double twist) {
  const unsigned n = grid.num_qubits();
  const double dp = MomentumGrid(grid, params.hbar).spacing();
  QuadraticPhaseSpec spec;
  spec.n_qubits = n;
  spec.alpha = dp;
  spec.signed_top_bit = true;
  // p + hbar phi / L = dp (s + phi / 2 pi); spread the offset over the n bit terms.
  spec.beta = twist / (kTwoPi * n);
  spec.gamma = dp * dp * params.epsilon / (2.0 * params.mass * params.hbar);
  return spec;
}

LinearPhaseSpec twist_gauge_spec(const SpatialGrid& grid, double twist) {
  const unsigned n = grid.num_qubits();
  LinearPhaseSpec spec;
  spec.n_qubits = n;
  spec.coefficient = twist * grid.delta() / grid.length();
  spec.beta = (-grid.half_width() + 0.5 * grid.delta()) / (grid.delta() * n);
  return spec;
}

Circuit build_potential_circuit(const Potential& potential, const SpatialGrid& grid,
                                const EvolutionParams& params) {
  DiagonalRoute route = params.potential_route;
  if (route == DiagonalRoute::Auto) {
    route = potential.is_centered_harmonic() ? DiagonalRoute::Quadratic
                                             : DiagonalRoute::GenericCircuit;
  }
  switch (route) {
    case DiagonalRoute::Quadratic: {
      const auto* harmonic = std::get_if<Harmonic>(&potential.shape);
      if (harmonic == nullptr) {
        throw ConstructionError("quadratic route requires a harmonic potential, got " +
                                potential.kind());
      }
      return build_quadratic_phase_circuit(harmonic_phase_spec(*harmonic, grid, params)).flatten();
    }
    case DiagonalRoute::GenericCircuit: {
      const auto table = potential_phases(potential, grid, params);
      return build_generic_diagonal_circuit([&](Index k) { return table[k]; },
                                            grid.num_qubits());
    }
    default:
      break;
  }
  throw ConstructionError("direct potential route has no gate form");
}

Circuit build_kinetic_circuit(const SpatialGrid& grid, const EvolutionParams& params,
                              double twist) {
  const unsigned n = grid.num_qubits();
  Circuit gates;
  if (twist != 0.0) {
    auto gauge = twist_gauge_spec(grid, twist);
    gauge.coefficient = -gauge.coefficient;
    gates = build_linear_phase_circuit(gauge);
  }
  const Circuit diagonal = kinetic_diagonal_gates(grid, params, twist);
  const auto to_momentum = build_qft_plan(n, true, params.reversal);
  const auto to_position = build_qft_plan(n, false, params.reversal);
  if (params.reversal == QftReversal::IndexRelabel) {
    // F K F^-1 = R C K C^-1 R with C the unswapped circuit and R the bit
    // reversal; conjugating by R is a relabelling of every qubit q -> n-1-q.
    const auto rev = reversed_qubit_mapping(n);
    gates = concat(std::move(gates), remap_qubits(to_momentum.gates, rev));
    gates = concat(std::move(gates), remap_qubits(diagonal, rev));
    gates = concat(std::move(gates), remap_qubits(to_position.gates, rev));
  } else {
    gates = concat(std::move(gates), to_momentum.gates);
    gates = concat(std::move(gates), diagonal);
    gates = concat(std::move(gates), to_position.gates);
  }
  if (twist != 0.0) gates = concat(std::move(gates), build_linear_phase_circuit(twist_gauge_spec(grid, twist)));
  return gates;
}

void potential_step(StateVector& state, const Potential& potential, const SpatialGrid& grid,
                    const EvolutionParams& params) {
  if (state.num_qubits() != grid.num_qubits()) {
    throw DomainError("state and grid sizes differ");
  }
  if (params.potential_route == DiagonalRoute::Direct) {
    apply_diagonal_direct(state, potential_phases(potential, grid, params));
  } else {
    qsim1d::apply(state, build_potential_circuit(potential, grid, params));
  }
}

void kinetic_step(StateVector& state, const SpatialGrid& grid, const EvolutionParams& params,
                  double twist) {
  if (state.num_qubits() != grid.num_qubits()) {
    throw DomainError("state and grid sizes differ");
  }
  if (params.kinetic_route != DiagonalRoute::Direct) {
    qsim1d::apply(state, build_kinetic_circuit(grid, params, twist));
    return;
  }
  const unsigned n = grid.num_qubits();
  const auto gauge = twist_gauge_spec(grid, twist);
  if (twist != 0.0) {
    apply_diagonal_direct(state, [&](Index k) { return -linear_phase(gauge, k); });
  }
  apply_plan(state, build_qft_plan(n, true, params.reversal));
  apply_diagonal_direct(state, kinetic_phases(grid, params, twist));
  apply_plan(state, build_qft_plan(n, false, params.reversal));
  if (twist != 0.0) {
    apply_diagonal_direct(state, [&](Index k) { return linear_phase(gauge, k); });
  }
}

TrotterStep::TrotterStep(const Potential& potential, const SpatialGrid& grid,
                         const EvolutionParams& params)
    : grid_(grid), params_(params), twist_(potential.twist) {
  validate(params);
  if (params.potential_route == DiagonalRoute::Direct) {
    potential_table_ = potential_phases(potential, grid, params);
  } else {
    potential_gates_ = build_potential_circuit(potential, grid, params);
  }
  if (params.kinetic_route != DiagonalRoute::Direct) {
    kinetic_gates_ = build_kinetic_circuit(grid, params, twist_);
  }
}

void TrotterStep::apply(StateVector& state) const {
  if (state.num_qubits() != grid_.num_qubits()) {
    throw DomainError("state and grid sizes differ");
  }
  if (potential_gates_) {
    qsim1d::apply(state, *potential_gates_);
  } else {
    apply_diagonal_direct(state, potential_table_);
  }
  if (kinetic_gates_) {
    qsim1d::apply(state, *kinetic_gates_);
  } else {
    kinetic_step(state, grid_, params_, twist_);
  }
}

Circuit TrotterStep::circuit() const {
  if (!has_circuit()) throw ConstructionError("a direct route was requested; no gate form");
  return concat(*potential_gates_, *kinetic_gates_);
}

std::vector<StateVector> evolve(const StateVector& initial, const Potential& potential,
                                const SpatialGrid& grid, const EvolutionParams& params) {
  validate(params);
  if (initial.num_qubits() != grid.num_qubits()) {
    throw DomainError("state and grid sizes differ");
  }
  std::vector<StateVector> trajectory{initial};
  if (params.steps == 0) return trajectory;
  trajectory.reserve(params.steps / params.snapshot_stride + 2);

  const TrotterStep step(potential, grid, params);
  StateVector state = initial;
  for (std::size_t s = 1; s <= params.steps; ++s) {
    step.apply(state);
    if (s % params.snapshot_stride == 0 || s == params.steps) trajectory.push_back(state);
  }
  return trajectory;
}

}  // namespace qsim1d
