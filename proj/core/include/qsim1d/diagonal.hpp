#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qsim1d/gates.hpp"

namespace qsim1d {

/// Phase f(k) in radians for each basis index k; the unitary is |k> -> e^{i f(k)} |k>.
using PhaseFunction = std::function<double(Index)>;

/// Reduces an angle to (-pi, pi].
double wrap_phase(double angle);

void apply_diagonal_direct(StateVector& state, const PhaseFunction& f);

/// Same as above with a precomputed table, phases[k] = f(k).
void apply_diagonal_direct(StateVector& state, std::span<const double> phases);

/**
 * The exponential-size circuit for an arbitrary diagonal unitary: 2^{n-1}
 * gates F_k, k = 0..2^{n-1}-1. F_k is controlled by qubits 1..n-1 matching
 * the binary digits of k and sets e^{i f(2k)}, e^{i f(2k+1)} on target qubit 0.
 */
Circuit build_generic_diagonal_circuit(const PhaseFunction& f, unsigned n);

/**
 * Quadratic phase f(k) = -gamma * (sum_j (w_j k_j + beta))^2 over the bits
 * k_j of k, with positional weights w_j = 2^j. For a harmonic potential on
 * the position grid gamma = m w^2 alpha^2 eps / 2 hbar, alpha = Delta and
 * beta = (-d + Delta/2) / (alpha n), so alpha * sum_j (w_j k_j + beta) = x_k.
 *
 * `signed_top_bit` gives the most significant qubit weight -2^{n-1}, which
 * turns the bit sum into the two's-complement value of k. That is the
 * wraparound momentum index used by the kinetic step.
 */
struct QuadraticPhaseSpec {
  double gamma = 0.0;
  double beta = 0.0;
  double alpha = 1.0;
  unsigned n_qubits = 1;
  bool signed_top_bit = false;
};

/// One factor e^{-i gamma (w_j k_j + beta)(w_l k_l + beta)} and the gates realizing it.
struct QuadraticFactor {
  Qubit j;
  Qubit l;
  Circuit gates;
};

struct QuadraticCircuit {
  std::vector<QuadraticFactor> factors;

  /// n^2: every ordered pair (j, l), including the j == l single-qubit terms.
  std::size_t factor_count() const noexcept { return factors.size(); }
  /// n^2 - n: factors that act on two distinct qubits.
  std::size_t two_qubit_factor_count() const noexcept;
  Circuit flatten() const;
};

std::vector<double> qubit_weights(unsigned n_qubits, bool signed_top_bit);

/// f(k) evaluated directly from the closed form.
double quadratic_phase(const QuadraticPhaseSpec& spec, Index k);

/// alpha * sum_j (w_j k_j + beta).
double quadratic_coordinate(const QuadraticPhaseSpec& spec, Index k);

QuadraticCircuit build_quadratic_phase_circuit(const QuadraticPhaseSpec& spec);

void apply_quadratic_phase(StateVector& state, const QuadraticPhaseSpec& spec);

/**
 * Linear phase f(k) = coefficient * sum_j (w_j k_j + beta), realized as n
 * uncontrolled phase pairs (global phase kept).
 */
struct LinearPhaseSpec {
  double coefficient = 0.0;
  double beta = 0.0;
  unsigned n_qubits = 1;
  bool signed_top_bit = false;
};

double linear_phase(const LinearPhaseSpec& spec, Index k);
Circuit build_linear_phase_circuit(const LinearPhaseSpec& spec);

}  // namespace qsim1d
