#pragma once

#include <string>
#include <variant>

namespace qsim1d {

struct FreeParticle {};

/// Uniform force: V(x) = -force * x, pushing toward +x for force > 0.
struct Linear {
  double force = 0.0;
};

/// V = height on [left, right], zero elsewhere.
struct SquareBarrier {
  double height = 0.0;
  double left = 0.0;
  double right = 0.0;
};

/// V = m w^2 x^2 / 2.
struct Harmonic {
  double mass = 1.0;
  double omega = 1.0;
};

/// Harmonic for x >= 0, a_cubic * x^3 for x < 0 (a_cubic < 0 confines).
struct PiecewiseCubic {
  Harmonic harmonic;
  double a_cubic = 0.0;
};

/// V = height outside [left, right]: a finite stand-in for impenetrable walls.
struct HardWalls {
  double height = 0.0;
  double left = 0.0;
  double right = 0.0;
};

using PotentialShape =
    std::variant<FreeParticle, Linear, SquareBarrier, Harmonic, PiecewiseCubic, HardWalls>;

/**
 * A one-dimensional potential plus an Aharonov-Bohm twist.
 *
 * `twist` is the flux phi in radians; the evolution then realizes the
 * twisted boundary condition psi(x + L) = e^{i phi} psi(x).
 */
struct Potential {
  PotentialShape shape = FreeParticle{};
  double twist = 0.0;

  double operator()(double x) const;

  /// True when the shape is exactly m w^2 x^2 / 2, so the n^2-gate circuit applies.
  bool is_centered_harmonic() const noexcept { return std::holds_alternative<Harmonic>(shape); }

  std::string kind() const;
};

/**
 * Largest wall height that stays below the per-step phase aliasing limit:
 * a diagonal phase of V eps / hbar is only meaningful modulo 2 pi, so walls
 * are capped at `fraction * pi * hbar / eps`.
 */
double max_wall_height(double epsilon, double hbar, double fraction = 0.9);

}  // namespace qsim1d
