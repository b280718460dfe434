#pragma once

#include <vector>

#include "qsim1d/state_vector.hpp"

namespace qsim1d {

/// The interval [-d, d] cut into 2^n cells of width Delta = 2d / 2^n;
/// x_k = -d + (k + 1/2) Delta is the cell centre represented by |k>.
class SpatialGrid {
 public:
  SpatialGrid(unsigned n_qubits, double half_width);

  unsigned num_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return std::size_t{1} << n_qubits_; }
  double half_width() const noexcept { return half_width_; }
  double length() const noexcept { return 2.0 * half_width_; }
  double delta() const noexcept { return delta_; }

  double x(Index k) const noexcept;
  std::vector<double> points() const;

 private:
  unsigned n_qubits_;
  double half_width_;
  double delta_;
};

/**
 * Momenta conjugate to a SpatialGrid: p_l = (2 pi hbar / L) s(l) with the
 * wraparound index s(l) = l for l < 2^{n-1} and l - 2^n otherwise.
 */
class MomentumGrid {
 public:
  MomentumGrid(const SpatialGrid& grid, double hbar);

  static long long signed_index(Index l, unsigned n_qubits) noexcept;

  std::size_t size() const noexcept { return std::size_t{1} << n_qubits_; }
  /// 2 pi hbar / L.
  double spacing() const noexcept { return spacing_; }
  double p(Index l) const noexcept;
  std::vector<double> points() const;

 private:
  unsigned n_qubits_;
  double spacing_;
};

}  // namespace qsim1d
