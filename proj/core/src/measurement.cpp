#include "qsim1d/measurement.hpp"

#include <algorithm>
#include <random>

#include "qsim1d/errors.hpp"

namespace qsim1d {

MeasurementRecord sample(const StateVector& state, std::size_t shots, std::uint64_t seed,
                         std::optional<double> norm_factor) {
  if (shots == 0) throw DomainError("sampling needs at least one shot");

  std::vector<double> cdf(state.size());
  double running = 0.0;
  for (std::size_t k = 0; k < state.size(); ++k) {
    running += std::norm(state[k]);
    cdf[k] = running;
  }
  if (!(running > 0.0)) throw DegenerateInputError("cannot sample a zero state");

  MeasurementRecord record;
  record.shots = shots;
  record.seed = seed;
  record.counts.assign(state.size(), 0);

  std::mt19937_64 engine(seed);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // First k with cdf[k] > u, which always has nonzero probability.
    if (it == cdf.end()) --it;
    ++record.counts[static_cast<std::size_t>(it - cdf.begin())];
  }

  const double scale = (norm_factor ? *norm_factor * *norm_factor : 1.0) /
                       static_cast<double>(shots);
  record.estimate.resize(state.size());
  for (std::size_t k = 0; k < state.size(); ++k) {
    record.estimate[k] = scale * static_cast<double>(record.counts[k]);
  }
  return record;
}

}  // namespace qsim1d
