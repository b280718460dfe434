#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qsim1d {

using Complex = std::complex<double>;
using Qubit = unsigned;
using Index = std::uint64_t;

/// Largest register the dense statevector will allocate.
inline constexpr unsigned kMaxQubits = 28;

/**
 * Dense register of 2^n complex amplitudes c_k.
 *
 * Bit j of the amplitude index k is the state of qubit j; qubit 0 is the
 * least significant digit k_0 and qubit n-1 the most significant.
 */
class StateVector {
 public:
  /// |0...0> on `n_qubits` qubits.
  explicit StateVector(unsigned n_qubits);

  /// Takes ownership of `amplitudes`; the size must be a power of two >= 2.
  /// No normalization is applied.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  unsigned num_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }

  const Complex& operator[](std::size_t k) const noexcept { return amplitudes_[k]; }
  Complex& operator[](std::size_t k) noexcept { return amplitudes_[k]; }

  double norm_squared() const noexcept;

  /// Rescales to unit norm. Throws DegenerateInputError on a zero vector.
  void normalize();

  /// |c_k|^2 for every k.
  std::vector<double> probabilities() const;

 private:
  StateVector(unsigned n_qubits, std::vector<Complex> amplitudes);

  unsigned n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Computational basis state |k> of an n-qubit register.
StateVector basis_state(unsigned n, Index k);

/// <a|b>, conjugating `a`.
Complex inner_product(const StateVector& a, const StateVector& b);

/// ||a - e^{i lambda} b|| with lambda = arg<b|a>, the distance modulo a global phase.
double distance_up_to_global_phase(const StateVector& a, const StateVector& b);

/// max_k |a_k - b_k| without any phase fitting.
double max_abs_difference(const StateVector& a, const StateVector& b);

}  // namespace qsim1d
