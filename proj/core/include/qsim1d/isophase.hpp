#pragma once

#include <span>
#include <vector>

#include "qsim1d/field.hpp"
#include "qsim1d/state_vector.hpp"

namespace qsim1d {

/// Which isophase family a curve belongs to.
enum class IsophaseBranch {
  ReZero,  ///< Re psi = 0: theta = pi/2 or 3 pi/2
  ImZero,  ///< Im psi = 0: theta = 0 or pi
};

struct IsophasePoint {
  double t;
  double x;
};

/// One tracked zero line in the (t, x) plane; slopes[i] is dx/dt between points i and i+1.
struct IsophaseCurve {
  IsophaseBranch branch;
  std::vector<IsophasePoint> points;
  std::vector<double> slopes;
};

struct IsophaseSet {
  std::vector<IsophaseCurve> curves;
  /// The field vanishes everywhere, so its zero set is the whole grid and no curves are reported.
  bool re_degenerate = false;
  bool im_degenerate = false;
  /// True when zeros came from sign changes of the signed fields.
  bool signed_mode = false;

  std::vector<double> slopes(IsophaseBranch branch) const;
};

struct IsophaseOptions {
  /// Largest x displacement between frames, in grid cells, still linked into one curve.
  double max_jump_cells = 2.0;
  /// Squared-field mode: a local minimum counts as a zero if below this fraction of the frame maximum.
  double minimum_fraction = 0.05;
  /// A field whose global maximum is below this fraction of max |psi|^2 is degenerate.
  double degenerate_fraction = 1e-12;
};

/**
 * Zero lines of Re psi and Im psi over a space-time grid.
 *
 * With `psi` (one state per frame) zeros are sign changes of the signed
 * fields, interpolated linearly between cells. Without it, zeros are local
 * minima of the squared fields `re2`, `im2` below the threshold, refined by
 * a parabola through the three neighbouring samples. Points in consecutive
 * frames are linked by nearest-neighbour matching.
 */
IsophaseSet isophase_extract(const Field& re2, const Field& im2, std::span<const double> times,
                             std::span<const double> x,
                             const std::vector<StateVector>* psi = nullptr,
                             const IsophaseOptions& options = {});

}  // namespace qsim1d
