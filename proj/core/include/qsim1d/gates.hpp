#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qsim1d/state_vector.hpp"

namespace qsim1d {

struct Hadamard {
  Qubit q;
};

/// |1> on qubit q picks up e^{i delta}.
struct PhaseShift {
  Qubit q;
  double delta;
};

struct Cnot {
  Qubit control;
  Qubit target;
};

/// Phase e^{i delta} on the |11> component of (control, target).
struct CPhase {
  Qubit control;
  Qubit target;
  double delta;
};

/// A control qubit together with the bit value that activates it
/// (full circle: value = true, empty circle: value = false).
struct ControlBit {
  Qubit q;
  bool value;
};

/**
 * Generalized controlled phase pair: when every control matches, the
 * target's |0> gains e^{i delta0} and its |1> gains e^{i delta1}.
 * With no controls this is an uncontrolled diagonal single-qubit gate,
 * which also carries global phase (delta0 == delta1).
 */
struct MultiControlledPhasePair {
  std::vector<ControlBit> controls;
  Qubit target;
  double delta0;
  double delta1;
};

using GateOp = std::variant<Hadamard, PhaseShift, Cnot, CPhase, MultiControlledPhasePair>;
using Circuit = std::vector<GateOp>;

/**
 * Restricts a gate to the subspace where (index & mask) == value.
 * Used to promote gates to ancilla-controlled versions without adding
 * new gate kinds. The mask must not overlap the gate's own qubits.
 */
struct Condition {
  Index mask = 0;
  Index value = 0;
};

void apply_hadamard(StateVector& state, Qubit q, Condition cond = {});
void apply_phase_shift(StateVector& state, Qubit q, double delta, Condition cond = {});
void apply_cnot(StateVector& state, Qubit control, Qubit target, Condition cond = {});
void apply_cphase(StateVector& state, Qubit control, Qubit target, double delta,
                  Condition cond = {});
void apply_multi_controlled_phase_pair(StateVector& state, std::span<const ControlBit> controls,
                                       Qubit target, double delta0, double delta1,
                                       Condition cond = {});

void apply(StateVector& state, const GateOp& gate, Condition cond = {});
void apply(StateVector& state, const Circuit& circuit, Condition cond = {});

/// Throws DomainError unless every qubit index of `gate` is distinct and < n.
void validate(const GateOp& gate, unsigned n_qubits);

/// Qubits the gate acts on (controls first, target last).
std::vector<Qubit> support(const GateOp& gate);

bool is_diagonal(const GateOp& gate);

/// Elementwise complex conjugate of the gate matrix: every phase angle negated.
GateOp conjugate(const GateOp& gate);
Circuit conjugate(const Circuit& circuit);

/// Reverse order, each gate replaced by its inverse.
Circuit inverse(const Circuit& circuit);

/// Relabels every qubit q as mapping[q].
Circuit remap_qubits(const Circuit& circuit, std::span<const Qubit> mapping);

std::string to_string(const GateOp& gate);

}  // namespace qsim1d
