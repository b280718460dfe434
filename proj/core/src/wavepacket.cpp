#include "qsim1d/wavepacket.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qsim1d/errors.hpp"

namespace qsim1d {

namespace {

Gaussian as_gaussian(const Squeezed& s, double hbar) {
  if (!(s.width_factor > 0.0)) throw DomainError("squeezed width_factor must be positive");
  return {s.x0, s.p0, s.width_factor * coherent_width(s.mass, s.omega, hbar)};
}

std::function<Complex(double)> gaussian_function(const Gaussian& g, double hbar) {
  if (!(g.sigma > 0.0)) throw DomainError("gaussian sigma must be positive");
  return [g, hbar](double x) {
    const double u = x - g.x0;
    return std::exp(Complex{-u * u / (4.0 * g.sigma * g.sigma), g.p0 * x / hbar});
  };
}

double gaussian_tail(const Gaussian& g, double d) {
  const double s = g.sigma * std::numbers::sqrt2;
  return 0.5 * std::erfc((d - g.x0) / s) + 0.5 * std::erfc((d + g.x0) / s);
}

}  // namespace

Discretized discretize(const std::function<Complex(double)>& psi, const SpatialGrid& grid) {
  std::vector<Complex> samples(grid.size());
  for (Index k = 0; k < samples.size(); ++k) samples[k] = psi(grid.x(k));
  double sum = 0.0;
  for (const auto& c : samples) sum += std::norm(c);
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw DegenerateInputError("wave function vanishes on every grid point");
  }
  const double norm_factor = std::sqrt(sum);
  for (auto& c : samples) c /= norm_factor;
  return {StateVector::from_amplitudes(std::move(samples)), norm_factor};
}

double coherent_width(double mass, double omega, double hbar) {
  if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0)) {
    throw DomainError("coherent width needs positive mass, omega and hbar");
  }
  return std::sqrt(hbar / (2.0 * mass * omega));
}

std::function<Complex(double)> packet_function(const WavepacketSpec& spec, double hbar) {
  return std::visit(
      [hbar](const auto& s) -> std::function<Complex(double)> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Gaussian>) {
          return gaussian_function(s, hbar);
        } else if constexpr (std::is_same_v<S, Squeezed>) {
          return gaussian_function(as_gaussian(s, hbar), hbar);
        } else {
          auto a = gaussian_function(s.first, hbar);
          auto b = gaussian_function(s.second, hbar);
          const Complex phase = std::polar(1.0, s.relative_phase);
          return [a, b, phase](double x) { return a(x) + phase * b(x); };
        }
      },
      spec);
}

double packet_tail_mass(const WavepacketSpec& spec, double half_width, double hbar) {
  return std::visit(
      [&](const auto& s) -> double {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Gaussian>) {
          return gaussian_tail(s, half_width);
        } else if constexpr (std::is_same_v<S, Squeezed>) {
          return gaussian_tail(as_gaussian(s, hbar), half_width);
        } else {
          // Cross terms are negligible for separated packets.
          return 0.5 * (gaussian_tail(s.first, half_width) + gaussian_tail(s.second, half_width));
        }
      },
      spec);
}

PreparedState prepare(const WavepacketSpec& spec, const SpatialGrid& grid, double hbar) {
  auto discretized = discretize(packet_function(spec, hbar), grid);
  PreparedState out{std::move(discretized.state), discretized.norm_factor,
                    packet_tail_mass(spec, grid.half_width(), hbar), {}};
  if (out.tail_mass > kTailMassWarning) {
    std::ostringstream os;
    os << "packet tail mass " << out.tail_mass << " outside (-d, d) exceeds "
       << kTailMassWarning;
    out.warnings.push_back(os.str());
  }
  return out;
}

double mean_position(const StateVector& state, const SpatialGrid& grid) {
  double mean = 0.0;
  for (Index k = 0; k < state.size(); ++k) mean += std::norm(state[k]) * grid.x(k);
  return mean / state.norm_squared();
}

double position_variance(const StateVector& state, const SpatialGrid& grid) {
  const double mean = mean_position(state, grid);
  double var = 0.0;
  for (Index k = 0; k < state.size(); ++k) {
    const double u = grid.x(k) - mean;
    var += std::norm(state[k]) * u * u;
  }
  return var / state.norm_squared();
}

}  // namespace qsim1d
