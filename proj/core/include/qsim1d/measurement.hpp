#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsim1d/state_vector.hpp"

namespace qsim1d {

/// Name of the generator behind sample(); recorded with every histogram.
inline constexpr const char* kSamplerRng = "std::mt19937_64/53-bit-inverse-cdf";

/// Outcome histogram of repeated projective measurements in the computational basis.
struct MeasurementRecord {
  std::size_t shots = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t seed = 0;
  std::string rng = kSamplerRng;
  /// N^2 N_k / N when a normalization factor was supplied, N_k / N otherwise.
  std::vector<double> estimate;
};

/**
 * Draws `shots` outcomes from |c_k|^2. The generator is a std::mt19937_64
 * seeded with `seed`; each draw takes one 64-bit word, keeps its top 53
 * bits as a uniform double in [0, 1) and inverts the cumulative
 * distribution. The standard pins the engine's output sequence, so counts
 * are identical across platforms for a given (state, shots, seed).
 */
MeasurementRecord sample(const StateVector& state, std::size_t shots, std::uint64_t seed,
                         std::optional<double> norm_factor = std::nullopt);

}  // namespace qsim1d
