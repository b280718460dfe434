#include "qsim1d/qft.hpp"

#include <numbers>

#include "qsim1d/errors.hpp"

namespace qsim1d {

namespace {

Circuit forward_gates(unsigned n) {
  // Most significant qubit first: H, then R_k from each less significant
  // qubit. The result leaves qubit j holding what belongs on qubit n-1-j.
  Circuit gates;
  gates.reserve(n * (n + 1) / 2);
  for (unsigned jj = n; jj-- > 0;) {
    gates.emplace_back(Hadamard{jj});
    for (unsigned m = jj; m-- > 0;) {
      const unsigned k = jj - m + 1;
      gates.emplace_back(CPhase{m, jj, 2.0 * std::numbers::pi / static_cast<double>(Index{1} << k)});
    }
  }
  return gates;
}

void append_swaps(Circuit& gates, unsigned n) {
  for (unsigned q = 0; q < n / 2; ++q) {
    const Qubit a = q;
    const Qubit b = n - 1 - q;
    gates.emplace_back(Cnot{a, b});
    gates.emplace_back(Cnot{b, a});
    gates.emplace_back(Cnot{a, b});
  }
}

}  // namespace

QftPlan build_qft_plan(unsigned n, bool inverse, QftReversal reversal) {
  if (n < 1) throw DomainError("QFT needs at least one qubit");
  QftPlan plan{n, inverse, reversal, forward_gates(n)};
  if (reversal == QftReversal::SwapGates) append_swaps(plan.gates, n);
  if (inverse) plan.gates = qsim1d::inverse(plan.gates);
  return plan;
}

void apply_plan(StateVector& state, const QftPlan& plan) {
  if (state.num_qubits() != plan.n_qubits) {
    throw DomainError("QFT plan size does not match the register");
  }
  const bool relabel = plan.reversal == QftReversal::IndexRelabel;
  // The inverse circuit expects bit-reversed input, so relabel before it.
  if (relabel && plan.inverse) reverse_qubit_order(state);
  qsim1d::apply(state, plan.gates);
  if (relabel && !plan.inverse) reverse_qubit_order(state);
}

void apply_qft(StateVector& state, bool inverse, QftReversal reversal) {
  apply_plan(state, build_qft_plan(state.num_qubits(), inverse, reversal));
}

QftGateCount gate_count(unsigned n) {
  if (n < 1) throw DomainError("QFT needs at least one qubit");
  return {n, n * (n - 1) / 2};
}

QftGateCount count_gates(const QftPlan& plan) {
  QftGateCount count{0, 0};
  for (const auto& g : plan.gates) {
    if (std::holds_alternative<Hadamard>(g)) ++count.hadamards;
    if (std::holds_alternative<CPhase>(g)) ++count.cphases;
  }
  return count;
}

Index reverse_bits(Index k, unsigned n) {
  Index r = 0;
  for (unsigned j = 0; j < n; ++j) {
    r = (r << 1) | (k & 1);
    k >>= 1;
  }
  return r;
}

void reverse_qubit_order(StateVector& state) {
  const unsigned n = state.num_qubits();
  auto amps = state.amplitudes();
  for (Index k = 0; k < amps.size(); ++k) {
    const Index r = reverse_bits(k, n);
    if (r > k) std::swap(amps[k], amps[r]);
  }
}

std::vector<Qubit> reversed_qubit_mapping(unsigned n) {
  std::vector<Qubit> mapping(n);
  for (unsigned q = 0; q < n; ++q) mapping[q] = n - 1 - q;
  return mapping;
}

}  // namespace qsim1d
