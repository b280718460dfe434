#include "qsim1d/potential.hpp"

#include <numbers>

#include "qsim1d/errors.hpp"

namespace qsim1d {

namespace {

double harmonic_value(const Harmonic& h, double x) {
  return 0.5 * h.mass * h.omega * h.omega * x * x;
}

template <class>
inline constexpr bool kAlwaysFalse = false;

}  // namespace

double Potential::operator()(double x) const {
  return std::visit(
      [x](const auto& v) -> double {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, FreeParticle>) {
          return 0.0;
        } else if constexpr (std::is_same_v<V, Linear>) {
          return -v.force * x;
        } else if constexpr (std::is_same_v<V, SquareBarrier>) {
          return (x >= v.left && x <= v.right) ? v.height : 0.0;
        } else if constexpr (std::is_same_v<V, Harmonic>) {
          return harmonic_value(v, x);
        } else if constexpr (std::is_same_v<V, PiecewiseCubic>) {
          return x >= 0.0 ? harmonic_value(v.harmonic, x) : v.a_cubic * x * x * x;
        } else if constexpr (std::is_same_v<V, HardWalls>) {
          return (x < v.left || x > v.right) ? v.height : 0.0;
        } else {
          static_assert(kAlwaysFalse<V>);
        }
      },
      shape);
}

std::string Potential::kind() const {
  static constexpr const char* names[] = {"free",     "linear",          "square_barrier",
                                          "harmonic", "piecewise_cubic", "hard_walls"};
  return names[shape.index()];
}

double max_wall_height(double epsilon, double hbar, double fraction) {
  if (!(epsilon > 0.0) || !(hbar > 0.0)) throw DomainError("epsilon and hbar must be positive");
  return fraction * std::numbers::pi * hbar / epsilon;
}

}  // namespace qsim1d
