#pragma once

#include "qsim1d/gates.hpp"

namespace qsim1d {

/// How the bit-reversed output order of the QFT circuit is undone.
enum class QftReversal {
  IndexRelabel,  ///< output qubits are relabelled; no gates are executed for it
  SwapGates,     ///< floor(n/2) SWAPs, each as three CNOTs, appended to the circuit
};

/**
 * Gate-level quantum Fourier transform on n qubits.
 *
 * Forward: c_l -> (1/sqrt N) sum_k e^{+2 pi i k l / N} c_k. The inverse plan
 * is the forward circuit run backwards with every R_k replaced by R_k^dagger.
 * `gates` always holds exactly n Hadamards and n(n-1)/2 CPHASE(2 pi / 2^k)
 * gates; SwapGates mode adds CNOTs on top of those.
 */
struct QftPlan {
  unsigned n_qubits = 0;
  bool inverse = false;
  QftReversal reversal = QftReversal::IndexRelabel;
  Circuit gates;
};

QftPlan build_qft_plan(unsigned n, bool inverse, QftReversal reversal = QftReversal::IndexRelabel);

/// Runs the plan's gates, then performs the relabelling if the plan asks for it.
void apply_plan(StateVector& state, const QftPlan& plan);

void apply_qft(StateVector& state, bool inverse = false,
               QftReversal reversal = QftReversal::IndexRelabel);

struct QftGateCount {
  unsigned hadamards;
  unsigned cphases;
};

QftGateCount gate_count(unsigned n);

/// Counts gate kinds actually present in a plan.
QftGateCount count_gates(const QftPlan& plan);

/// Reverses the n low bits of k.
Index reverse_bits(Index k, unsigned n);

/// Permutes amplitudes k -> reverse_bits(k): the classical relabelling of all qubits q -> n-1-q.
void reverse_qubit_order(StateVector& state);

/// Identity mapping with q -> n-1-q, for remap_qubits.
std::vector<Qubit> reversed_qubit_mapping(unsigned n);

}  // namespace qsim1d
