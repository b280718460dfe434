#include "qsim1d/diagonal.hpp"

#include <cmath>
#include <numbers>

#include "qsim1d/errors.hpp"

namespace qsim1d {

double wrap_phase(double angle) {
  const double r = std::remainder(angle, 2.0 * std::numbers::pi);
  return r == -std::numbers::pi ? std::numbers::pi : r;
}

void apply_diagonal_direct(StateVector& state, const PhaseFunction& f) {
  auto amps = state.amplitudes();
  for (Index k = 0; k < amps.size(); ++k) amps[k] *= std::polar(1.0, f(k));
}

void apply_diagonal_direct(StateVector& state, std::span<const double> phases) {
  if (phases.size() != state.size()) {
    throw DomainError("phase table size does not match the register");
  }
  auto amps = state.amplitudes();
  for (std::size_t k = 0; k < amps.size(); ++k) amps[k] *= std::polar(1.0, phases[k]);
}

Circuit build_generic_diagonal_circuit(const PhaseFunction& f, unsigned n) {
  if (n < 1) throw DomainError("diagonal circuit needs at least one qubit");
  if (n > kMaxQubits) throw ResourceError("diagonal circuit too large");
  const Index half = Index{1} << (n - 1);
  Circuit gates;
  gates.reserve(half);
  for (Index k = 0; k < half; ++k) {
    MultiControlledPhasePair gate;
    gate.target = 0;
    gate.controls.reserve(n - 1);
    for (unsigned q = 1; q < n; ++q) gate.controls.push_back({q, ((k >> (q - 1)) & 1) != 0});
    gate.delta0 = wrap_phase(f(2 * k));
    gate.delta1 = wrap_phase(f(2 * k + 1));
    gates.emplace_back(std::move(gate));
  }
  return gates;
}

std::vector<double> qubit_weights(unsigned n_qubits, bool signed_top_bit) {
  std::vector<double> w(n_qubits);
  for (unsigned j = 0; j < n_qubits; ++j) w[j] = std::ldexp(1.0, static_cast<int>(j));
  if (signed_top_bit && n_qubits > 0) w.back() = -w.back();
  return w;
}

namespace {

double bit_sum(std::span<const double> weights, double beta, Index k) {
  double s = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    s += (((k >> j) & 1) ? weights[j] : 0.0) + beta;
  }
  return s;
}

void check_spec(unsigned n) {
  if (n < 1) throw DomainError("phase spec needs at least one qubit");
  if (n > kMaxQubits) throw ResourceError("phase spec too large");
}

}  // namespace

double quadratic_coordinate(const QuadraticPhaseSpec& spec, Index k) {
  const auto w = qubit_weights(spec.n_qubits, spec.signed_top_bit);
  return spec.alpha * bit_sum(w, spec.beta, k);
}

double quadratic_phase(const QuadraticPhaseSpec& spec, Index k) {
  const auto w = qubit_weights(spec.n_qubits, spec.signed_top_bit);
  const double s = bit_sum(w, spec.beta, k);
  return -spec.gamma * s * s;
}

std::size_t QuadraticCircuit::two_qubit_factor_count() const noexcept {
  std::size_t count = 0;
  for (const auto& f : factors) count += f.j != f.l ? 1 : 0;
  return count;
}

Circuit QuadraticCircuit::flatten() const {
  Circuit out;
  for (const auto& f : factors) out.insert(out.end(), f.gates.begin(), f.gates.end());
  return out;
}

QuadraticCircuit build_quadratic_phase_circuit(const QuadraticPhaseSpec& spec) {
  check_spec(spec.n_qubits);
  const unsigned n = spec.n_qubits;
  const auto w = qubit_weights(n, spec.signed_top_bit);
  const double beta = spec.beta;
  // Phase of factor (j, l) for bit values (a, b).
  auto phase = [&](Qubit j, Qubit l, int a, int b) {
    return -spec.gamma * (w[j] * a + beta) * (w[l] * b + beta);
  };

  QuadraticCircuit circuit;
  circuit.factors.reserve(std::size_t{n} * n);
  for (Qubit j = 0; j < n; ++j) {
    for (Qubit l = 0; l < n; ++l) {
      QuadraticFactor factor{j, l, {}};
      if (j == l) {
        factor.gates.emplace_back(MultiControlledPhasePair{
            {}, j, wrap_phase(phase(j, j, 0, 0)), wrap_phase(phase(j, j, 1, 1))});
      } else {
        const double f00 = phase(j, l, 0, 0);
        const double f10 = phase(j, l, 1, 0);
        const double f01 = phase(j, l, 0, 1);
        const double f11 = phase(j, l, 1, 1);
        factor.gates.emplace_back(
            MultiControlledPhasePair{{}, j, wrap_phase(f00), wrap_phase(f10)});
        factor.gates.emplace_back(PhaseShift{l, wrap_phase(f01 - f00)});
        factor.gates.emplace_back(CPhase{j, l, wrap_phase(f11 - f10 - f01 + f00)});
      }
      circuit.factors.push_back(std::move(factor));
    }
  }
  return circuit;
}

void apply_quadratic_phase(StateVector& state, const QuadraticPhaseSpec& spec) {
  if (spec.n_qubits != state.num_qubits()) {
    throw DomainError("quadratic phase spec size does not match the register");
  }
  if (spec.gamma == 0.0) return;
  for (const auto& factor : build_quadratic_phase_circuit(spec).factors) {
    qsim1d::apply(state, factor.gates);
  }
}

double linear_phase(const LinearPhaseSpec& spec, Index k) {
  const auto w = qubit_weights(spec.n_qubits, spec.signed_top_bit);
  return spec.coefficient * bit_sum(w, spec.beta, k);
}

Circuit build_linear_phase_circuit(const LinearPhaseSpec& spec) {
  check_spec(spec.n_qubits);
  const auto w = qubit_weights(spec.n_qubits, spec.signed_top_bit);
  Circuit gates;
  gates.reserve(spec.n_qubits);
  for (Qubit j = 0; j < spec.n_qubits; ++j) {
    gates.emplace_back(MultiControlledPhasePair{{},
                                                j,
                                                wrap_phase(spec.coefficient * spec.beta),
                                                wrap_phase(spec.coefficient * (w[j] + spec.beta))});
  }
  return gates;
}

}  // namespace qsim1d
