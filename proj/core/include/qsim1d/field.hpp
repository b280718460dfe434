#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qsim1d {

/// Row-major frames x points matrix of real values (one row per time frame).
class Field {
 public:
  Field() = default;
  Field(std::size_t frames, std::size_t points, double fill = 0.0)
      : frames_(frames), points_(points), data_(frames * points, fill) {}

  std::size_t frames() const noexcept { return frames_; }
  std::size_t points() const noexcept { return points_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t f, std::size_t k) noexcept { return data_[f * points_ + k]; }
  double operator()(std::size_t f, std::size_t k) const noexcept { return data_[f * points_ + k]; }

  std::span<const double> row(std::size_t f) const noexcept {
    return {data_.data() + f * points_, points_};
  }
  std::span<double> row(std::size_t f) noexcept { return {data_.data() + f * points_, points_}; }

  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::size_t frames_ = 0;
  std::size_t points_ = 0;
  std::vector<double> data_;
};

}  // namespace qsim1d
