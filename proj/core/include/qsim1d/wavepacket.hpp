#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "qsim1d/grid.hpp"

namespace qsim1d {

/// psi(x) = exp(-(x - x0)^2 / 4 sigma^2 + i p0 x / hbar); sigma is the rms width of |psi|^2.
struct Gaussian {
  double x0 = 0.0;
  double p0 = 0.0;
  double sigma = 1.0;
};

/// Gaussian of width width_factor * sqrt(hbar / 2 m w) for the reference oscillator (mass, omega).
struct Squeezed {
  double x0 = 0.0;
  double p0 = 0.0;
  double width_factor = 1.0;
  double mass = 1.0;
  double omega = 1.0;
};

/// first + e^{i relative_phase} second, normalized after discretization.
struct TwoPacket {
  Gaussian first;
  Gaussian second;
  double relative_phase = 0.0;
};

using WavepacketSpec = std::variant<Gaussian, Squeezed, TwoPacket>;

/// Tail mass above which prepare() records a warning.
inline constexpr double kTailMassWarning = 1e-6;

struct Discretized {
  StateVector state;
  /// sqrt(sum_k |psi(x_k)|^2) of the raw samples.
  double norm_factor;
};

struct PreparedState {
  StateVector state;
  double norm_factor = 1.0;
  /// Continuum probability of the analytic packet outside (-d, d).
  double tail_mass = 0.0;
  std::vector<std::string> warnings;
};

/// Samples psi at the grid points and normalizes: c_k = psi(x_k) / N.
/// Throws DegenerateInputError when every sample is zero.
Discretized discretize(const std::function<Complex(double)>& psi, const SpatialGrid& grid);

/// sqrt(hbar / 2 m w).
double coherent_width(double mass, double omega, double hbar = 1.0);

/// Analytic packet as a function of x (not normalized).
std::function<Complex(double)> packet_function(const WavepacketSpec& spec, double hbar = 1.0);

/// Probability of the analytic |psi|^2 outside (-d, d).
double packet_tail_mass(const WavepacketSpec& spec, double half_width, double hbar = 1.0);

PreparedState prepare(const WavepacketSpec& spec, const SpatialGrid& grid, double hbar = 1.0);

/// <x> and <x^2> - <x>^2 of a grid state.
double mean_position(const StateVector& state, const SpatialGrid& grid);
double position_variance(const StateVector& state, const SpatialGrid& grid);

}  // namespace qsim1d
