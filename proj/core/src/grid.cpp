#include "qsim1d/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsim1d/errors.hpp"

namespace qsim1d {

SpatialGrid::SpatialGrid(unsigned n_qubits, double half_width)
    : n_qubits_(n_qubits), half_width_(half_width) {
  if (n_qubits < 1) throw DomainError("grid needs at least one qubit");
  if (n_qubits > kMaxQubits) throw ResourceError("grid of " + std::to_string(n_qubits) + " qubits");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("grid half-width must be positive and finite");
  }
  delta_ = 2.0 * half_width / static_cast<double>(size());
}

double SpatialGrid::x(Index k) const noexcept {
  return -half_width_ + (static_cast<double>(k) + 0.5) * delta_;
}

std::vector<double> SpatialGrid::points() const {
  std::vector<double> xs(size());
  for (Index k = 0; k < xs.size(); ++k) xs[k] = x(k);
  return xs;
}

MomentumGrid::MomentumGrid(const SpatialGrid& grid, double hbar)
    : n_qubits_(grid.num_qubits()), spacing_(2.0 * std::numbers::pi * hbar / grid.length()) {
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
}

long long MomentumGrid::signed_index(Index l, unsigned n_qubits) noexcept {
  const Index n_points = Index{1} << n_qubits;
  const auto s = static_cast<long long>(l);
  return l < n_points / 2 ? s : s - static_cast<long long>(n_points);
}

double MomentumGrid::p(Index l) const noexcept {
  return spacing_ * static_cast<double>(signed_index(l, n_qubits_));
}

std::vector<double> MomentumGrid::points() const {
  std::vector<double> ps(size());
  for (Index l = 0; l < ps.size(); ++l) ps[l] = p(l);
  return ps;
}

}  // namespace qsim1d
