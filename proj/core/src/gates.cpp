#include "qsim1d/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsim1d/errors.hpp"

namespace qsim1d {

namespace {

constexpr Index bit(Qubit q) { return Index{1} << q; }

void check_qubit(const StateVector& state, Qubit q) {
  if (q >= state.num_qubits()) {
    throw DomainError("qubit " + std::to_string(q) + " out of range for " +
                      std::to_string(state.num_qubits()) + "-qubit register");
  }
}

void check_condition(const StateVector& state, Condition cond, Index gate_mask) {
  const Index all = static_cast<Index>(state.size()) - 1;
  if ((cond.mask & ~all) != 0 || (cond.value & ~cond.mask) != 0) {
    throw DomainError("condition mask does not fit the register");
  }
  if ((cond.mask & gate_mask) != 0) {
    throw DomainError("condition overlaps the qubits of the gate");
  }
}

// Calls fn(k) for every index with (k & fixed_mask) == fixed_value, by
// enumerating subsets of the free bits.
template <class Fn>
void for_each_matching(std::size_t size, Index fixed_mask, Index fixed_value, Fn&& fn) {
  const Index free = (static_cast<Index>(size) - 1) & ~fixed_mask;
  Index s = 0;
  do {
    fn(s | fixed_value);
    s = (s - free) & free;
  } while (s != 0);
}

}  // namespace

void apply_hadamard(StateVector& state, Qubit q, Condition cond) {
  check_qubit(state, q);
  check_condition(state, cond, bit(q));
  const double r = 1.0 / std::numbers::sqrt2;
  const Index stride = bit(q);
  auto amps = state.amplitudes();
  for_each_matching(state.size(), cond.mask | stride, cond.value, [&](Index i0) {
    const Index i1 = i0 | stride;
    const Complex a = amps[i0];
    const Complex b = amps[i1];
    amps[i0] = (a + b) * r;
    amps[i1] = (a - b) * r;
  });
}

void apply_phase_shift(StateVector& state, Qubit q, double delta, Condition cond) {
  check_qubit(state, q);
  check_condition(state, cond, bit(q));
  const Complex phase = std::polar(1.0, delta);
  auto amps = state.amplitudes();
  for_each_matching(state.size(), cond.mask | bit(q), cond.value | bit(q),
                    [&](Index k) { amps[k] *= phase; });
}

void apply_cnot(StateVector& state, Qubit control, Qubit target, Condition cond) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) throw DomainError("CNOT control and target coincide");
  check_condition(state, cond, bit(control) | bit(target));
  auto amps = state.amplitudes();
  for_each_matching(state.size(), cond.mask | bit(control) | bit(target),
                    cond.value | bit(control),
                    [&](Index i0) { std::swap(amps[i0], amps[i0 | bit(target)]); });
}

void apply_cphase(StateVector& state, Qubit control, Qubit target, double delta,
                  Condition cond) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) throw DomainError("CPHASE control and target coincide");
  const Index both = bit(control) | bit(target);
  check_condition(state, cond, both);
  const Complex phase = std::polar(1.0, delta);
  auto amps = state.amplitudes();
  for_each_matching(state.size(), cond.mask | both, cond.value | both,
                    [&](Index k) { amps[k] *= phase; });
}

void apply_multi_controlled_phase_pair(StateVector& state, std::span<const ControlBit> controls,
                                       Qubit target, double delta0, double delta1,
                                       Condition cond) {
  check_qubit(state, target);
  Index control_mask = 0;
  Index control_value = 0;
  for (const auto& c : controls) {
    check_qubit(state, c.q);
    if (c.q == target || (control_mask & bit(c.q)) != 0) {
      throw DomainError("multi-controlled phase pair has overlapping qubit indices");
    }
    control_mask |= bit(c.q);
    if (c.value) control_value |= bit(c.q);
  }
  check_condition(state, cond, control_mask | bit(target));

  auto amps = state.amplitudes();
  const Index fixed = cond.mask | control_mask | bit(target);
  const Index value = cond.value | control_value;
  if (delta0 != 0.0) {
    const Complex phase0 = std::polar(1.0, delta0);
    for_each_matching(state.size(), fixed, value, [&](Index k) { amps[k] *= phase0; });
  }
  if (delta1 != 0.0) {
    const Complex phase1 = std::polar(1.0, delta1);
    for_each_matching(state.size(), fixed, value | bit(target),
                      [&](Index k) { amps[k] *= phase1; });
  }
}

void apply(StateVector& state, const GateOp& gate, Condition cond) {
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Hadamard>) {
          apply_hadamard(state, g.q, cond);
        } else if constexpr (std::is_same_v<G, PhaseShift>) {
          apply_phase_shift(state, g.q, g.delta, cond);
        } else if constexpr (std::is_same_v<G, Cnot>) {
          apply_cnot(state, g.control, g.target, cond);
        } else if constexpr (std::is_same_v<G, CPhase>) {
          apply_cphase(state, g.control, g.target, g.delta, cond);
        } else {
          apply_multi_controlled_phase_pair(state, g.controls, g.target, g.delta0, g.delta1,
                                            cond);
        }
      },
      gate);
}

void apply(StateVector& state, const Circuit& circuit, Condition cond) {
  for (const auto& gate : circuit) apply(state, gate, cond);
}

std::vector<Qubit> support(const GateOp& gate) {
  return std::visit(
      [](const auto& g) -> std::vector<Qubit> {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Hadamard> || std::is_same_v<G, PhaseShift>) {
          return {g.q};
        } else if constexpr (std::is_same_v<G, Cnot> || std::is_same_v<G, CPhase>) {
          return {g.control, g.target};
        } else {
          std::vector<Qubit> qs;
          qs.reserve(g.controls.size() + 1);
          for (const auto& c : g.controls) qs.push_back(c.q);
          qs.push_back(g.target);
          return qs;
        }
      },
      gate);
}

void validate(const GateOp& gate, unsigned n_qubits) {
  auto qs = support(gate);
  for (Qubit q : qs) {
    if (q >= n_qubits) {
      throw DomainError(to_string(gate) + ": qubit " + std::to_string(q) + " out of range");
    }
  }
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    throw DomainError(to_string(gate) + ": qubit indices are not distinct");
  }
}

bool is_diagonal(const GateOp& gate) {
  return !std::holds_alternative<Hadamard>(gate) && !std::holds_alternative<Cnot>(gate);
}

GateOp conjugate(const GateOp& gate) {
  return std::visit(
      [](auto g) -> GateOp {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, PhaseShift> || std::is_same_v<G, CPhase>) {
          g.delta = -g.delta;
        } else if constexpr (std::is_same_v<G, MultiControlledPhasePair>) {
          g.delta0 = -g.delta0;
          g.delta1 = -g.delta1;
        }
        return g;
      },
      gate);
}

Circuit conjugate(const Circuit& circuit) {
  Circuit out;
  out.reserve(circuit.size());
  for (const auto& g : circuit) out.push_back(conjugate(g));
  return out;
}

Circuit inverse(const Circuit& circuit) {
  // Every gate kind is either real and self-inverse (H, CNOT) or diagonal,
  // where inverse and conjugate coincide.
  Circuit out;
  out.reserve(circuit.size());
  for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) out.push_back(conjugate(*it));
  return out;
}

Circuit remap_qubits(const Circuit& circuit, std::span<const Qubit> mapping) {
  auto map = [&](Qubit q) {
    if (q >= mapping.size()) throw DomainError("qubit " + std::to_string(q) + " has no mapping");
    return mapping[q];
  };
  Circuit out;
  out.reserve(circuit.size());
  for (const auto& gate : circuit) {
    out.push_back(std::visit(
        [&](auto g) -> GateOp {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, Hadamard> || std::is_same_v<G, PhaseShift>) {
            g.q = map(g.q);
          } else if constexpr (std::is_same_v<G, Cnot> || std::is_same_v<G, CPhase>) {
            g.control = map(g.control);
            g.target = map(g.target);
          } else {
            for (auto& c : g.controls) c.q = map(c.q);
            g.target = map(g.target);
          }
          return g;
        },
        gate));
  }
  return out;
}

std::string to_string(const GateOp& gate) {
  std::ostringstream os;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Hadamard>) {
          os << "H(" << g.q << ")";
        } else if constexpr (std::is_same_v<G, PhaseShift>) {
          os << "P(" << g.q << ", " << g.delta << ")";
        } else if constexpr (std::is_same_v<G, Cnot>) {
          os << "CNOT(" << g.control << " -> " << g.target << ")";
        } else if constexpr (std::is_same_v<G, CPhase>) {
          os << "CPHASE(" << g.control << ", " << g.target << ", " << g.delta << ")";
        } else {
          os << "F([";
          for (std::size_t i = 0; i < g.controls.size(); ++i) {
            if (i) os << ' ';
            os << g.controls[i].q << '=' << int(g.controls[i].value);
          }
          os << "] -> " << g.target << ", " << g.delta0 << ", " << g.delta1 << ")";
        }
      },
      gate);
  return os.str();
}

}  // namespace qsim1d
