#pragma once

#include <span>
#include <vector>

#include "qsim1d/grid.hpp"
#include "qsim1d/potential.hpp"
#include "qsim1d/state_vector.hpp"

namespace qsim1d {

struct EvolutionParams;

namespace oracle {

/// Limits on dense references.
inline constexpr unsigned kMaxDftQubits = 12;
inline constexpr unsigned kMaxPropagatorQubits = 8;

/// Dense N x N complex matrix, row-major.
class DenseOperator {
 public:
  explicit DenseOperator(std::size_t dim);

  static DenseOperator identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * dim_ + c];
  }

  std::vector<Complex> apply(std::span<const Complex> v) const;
  StateVector apply(const StateVector& state) const;

  DenseOperator adjoint() const;
  DenseOperator operator*(const DenseOperator& rhs) const;

  /// max |(U^dagger U - I)_{rc}|.
  double unitarity_error() const;

  /// <psi|A|psi> / <psi|psi>.
  Complex expectation(const StateVector& state) const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Entry (l, k) = e^{2 pi i k l / N} / sqrt N.
DenseOperator dft_matrix(unsigned n);

/**
 * Discretized H = T + V on the grid. T = M F^-1 diag((p_l + hbar phi/L)^2 / 2m) F M^-1
 * with F the unitary DFT to momentum labels, p_l the wraparound momenta and
 * M = diag(e^{i phi x_k / L}) the twist gauge factor. V is diagonal.
 */
DenseOperator hamiltonian_matrix(const Potential& potential, const SpatialGrid& grid,
                                 const EvolutionParams& params);

/// Eigenvalues and eigenvectors (columns) of the discretized Hamiltonian.
struct Spectrum {
  std::vector<double> energies;
  DenseOperator eigenvectors;
};

Spectrum spectrum(const Potential& potential, const SpatialGrid& grid,
                  const EvolutionParams& params);

/// e^{-i H t / hbar} through the eigendecomposition of the discretized H.
DenseOperator exact_propagator(const Potential& potential, const SpatialGrid& grid, double t,
                               const EvolutionParams& params);
DenseOperator exact_propagator(const Spectrum& spectrum, double t, double hbar);

/**
 * Array-based split-operator evolution using FFTW, sharing no code with the
 * gate path: per step multiply by e^{-i V eps / hbar}, transform to momentum
 * (FFTW_FORWARD), multiply by the kinetic phase, transform back. Snapshots
 * follow the same rules as evolve().
 */
std::vector<std::vector<Complex>> split_operator_reference(std::span<const Complex> psi0,
                                                           const Potential& potential,
                                                           const SpatialGrid& grid,
                                                           const EvolutionParams& params);

}  // namespace oracle

/**
 * ||psi_trotter(t) - psi_exact(t)|| for t = steps * epsilon, where the
 * Trotter state comes from the gate-level evolve() and the exact state from
 * the dense propagator. n <= 8.
 */
double trotter_error(const StateVector& initial, const Potential& potential,
                     const SpatialGrid& grid, const EvolutionParams& params);

}  // namespace qsim1d
