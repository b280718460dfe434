#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "qsim1d/gates.hpp"

namespace qsim1d {

/// State preparation S: maps |0...0> to the given amplitudes. Its conjugate loads conj(amplitudes).
struct Preparation {
  std::vector<Complex> amplitudes;
};

/// An operator known only by its action. It has no conjugate, so it cannot enter a Ramsey circuit.
struct OpaqueOperator {
  std::string name;
  std::function<void(StateVector&)> action;
};

using ProgramStep = std::variant<GateOp, Preparation, OpaqueOperator>;

/// W = U(t) S as an ordered list of steps acting on |0...0> of n qubits.
struct Program {
  unsigned n_qubits = 1;
  std::vector<ProgramStep> steps;

  void append(const GateOp& gate) { steps.emplace_back(gate); }
  void append(const Circuit& circuit);
};

/// W|0...0>.
StateVector run(const Program& program);

/// Throws ConstructionError if any step has no defined conjugate.
Program conjugate(const Program& program);

/// P0(k) = |<0|<k|Phi>|^2 and P1(k) = |<1|<k|Phi>|^2 for the n system qubits.
struct RamseyOutcome {
  std::vector<double> p0;
  std::vector<double> p1;
  double ancilla_p0 = 0.0;
  double ancilla_p1 = 0.0;
};

/**
 * Ancilla interferometer measuring {Re psi}^2 and {Im psi}^2 of psi = W|0>.
 *
 * The ancilla is the most significant qubit (index n) of an (n+1)-qubit
 * register. Construction applies H to it; each appended step runs as W on
 * the ancilla-0 branch and as W* on the ancilla-1 branch; output() applies
 * the closing H, giving
 *   |Phi> = |0>(psi + psi*)/2 + |1>(psi - psi*)/2.
 * Steps can be appended after output() has been read, so one instance
 * follows a whole trajectory.
 */
class RamseyInterferometer {
 public:
  explicit RamseyInterferometer(unsigned n_system_qubits);

  void append(const ProgramStep& step);
  void append(const Circuit& circuit);
  void append(const Program& program);

  StateVector output() const;
  RamseyOutcome outcome() const;

  unsigned system_qubits() const noexcept { return n_; }

 private:
  void apply_branch(const ProgramStep& step, bool conjugated);

  unsigned n_;
  StateVector state_;
};

/// |Phi(t)> for W given as a program.
StateVector ramsey_state(const Program& w);

RamseyOutcome ramsey_probabilities(const StateVector& phi);

}  // namespace qsim1d
