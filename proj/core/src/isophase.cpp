#include "qsim1d/isophase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qsim1d/errors.hpp"

namespace qsim1d {

namespace {

std::vector<double> signed_zeros(std::span<const double> values, std::span<const double> x) {
  std::vector<double> zeros;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double a = values[k];
    if (a == 0.0) {
      zeros.push_back(x[k]);
    } else if (k + 1 < values.size() && a * values[k + 1] < 0.0) {
      zeros.push_back(x[k] + (x[k + 1] - x[k]) * a / (a - values[k + 1]));
    }
  }
  return zeros;
}

std::vector<double> squared_zeros(std::span<const double> values, std::span<const double> x,
                                  double fraction) {
  std::vector<double> zeros;
  if (values.size() < 3) return zeros;
  const double peak = *std::max_element(values.begin(), values.end());
  if (!(peak > 0.0)) return zeros;
  for (std::size_t k = 1; k + 1 < values.size(); ++k) {
    const double l = values[k - 1];
    const double c = values[k];
    const double r = values[k + 1];
    if (!(c <= l && c < r) || c > fraction * peak) continue;
    const double curvature = l - 2.0 * c + r;
    double offset = curvature > 0.0 ? 0.5 * (l - r) / curvature : 0.0;
    offset = std::clamp(offset, -0.5, 0.5);
    zeros.push_back(x[k] + offset * (x[k + 1] - x[k]));
  }
  return zeros;
}

double field_max(const Field& field) {
  double m = 0.0;
  for (double v : field.data()) m = std::max(m, std::abs(v));
  return m;
}

void link_frames(IsophaseBranch branch, const std::vector<std::vector<double>>& zeros_per_frame,
                 std::span<const double> times, double max_jump, std::vector<IsophaseCurve>& out) {
  std::vector<std::size_t> open;  // indices into `out` of curves ending at the previous frame
  for (std::size_t f = 0; f < zeros_per_frame.size(); ++f) {
    const auto& zeros = zeros_per_frame[f];
    struct Candidate {
      double distance;
      std::size_t curve;
      std::size_t zero;
    };
    std::vector<Candidate> candidates;
    for (std::size_t c : open) {
      const double last = out[c].points.back().x;
      for (std::size_t z = 0; z < zeros.size(); ++z) {
        const double dist = std::abs(zeros[z] - last);
        if (dist <= max_jump) candidates.push_back({dist, c, z});
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });

    std::vector<bool> zero_used(zeros.size(), false);
    std::vector<std::size_t> next_open;
    std::vector<std::size_t> curve_used;
    for (const auto& cand : candidates) {
      if (zero_used[cand.zero] ||
          std::find(curve_used.begin(), curve_used.end(), cand.curve) != curve_used.end()) {
        continue;
      }
      zero_used[cand.zero] = true;
      curve_used.push_back(cand.curve);
      auto& curve = out[cand.curve];
      const auto prev = curve.points.back();
      curve.points.push_back({times[f], zeros[cand.zero]});
      curve.slopes.push_back((zeros[cand.zero] - prev.x) / (times[f] - prev.t));
      next_open.push_back(cand.curve);
    }
    for (std::size_t z = 0; z < zeros.size(); ++z) {
      if (zero_used[z]) continue;
      out.push_back({branch, {{times[f], zeros[z]}}, {}});
      next_open.push_back(out.size() - 1);
    }
    open = std::move(next_open);
  }
}

}  // namespace

std::vector<double> IsophaseSet::slopes(IsophaseBranch branch) const {
  std::vector<double> all;
  for (const auto& c : curves) {
    if (c.branch == branch) all.insert(all.end(), c.slopes.begin(), c.slopes.end());
  }
  return all;
}

IsophaseSet isophase_extract(const Field& re2, const Field& im2, std::span<const double> times,
                             std::span<const double> x, const std::vector<StateVector>* psi,
                             const IsophaseOptions& options) {
  if (re2.empty() || im2.empty()) throw DomainError("isophase extraction needs non-empty grids");
  if (re2.frames() != im2.frames() || re2.points() != im2.points()) {
    throw DomainError("re2 and im2 grids differ in shape");
  }
  if (times.size() != re2.frames() || x.size() != re2.points()) {
    throw DomainError("time or position axis does not match the grids");
  }
  if (psi != nullptr) {
    if (psi->size() != re2.frames()) throw DomainError("trajectory length does not match the grids");
    for (const auto& s : *psi) {
      if (s.size() != re2.points()) throw DomainError("trajectory state size does not match");
    }
  }
  for (std::size_t f = 1; f < times.size(); ++f) {
    if (!(times[f] > times[f - 1])) throw DomainError("times must increase strictly");
  }

  IsophaseSet set;
  set.signed_mode = psi != nullptr;
  const double re_max = field_max(re2);
  const double im_max = field_max(im2);
  const double total = std::max(re_max, im_max);
  set.re_degenerate = !(re_max > options.degenerate_fraction * total);
  set.im_degenerate = !(im_max > options.degenerate_fraction * total);

  const double cell = x.size() > 1 ? std::abs(x[1] - x[0]) : 1.0;
  const double max_jump = options.max_jump_cells * cell;

  for (IsophaseBranch branch : {IsophaseBranch::ReZero, IsophaseBranch::ImZero}) {
    const bool re = branch == IsophaseBranch::ReZero;
    if (re ? set.re_degenerate : set.im_degenerate) continue;
    std::vector<std::vector<double>> zeros(re2.frames());
    std::vector<double> values(re2.points());
    for (std::size_t f = 0; f < re2.frames(); ++f) {
      if (psi != nullptr) {
        const auto& s = (*psi)[f];
        for (std::size_t k = 0; k < values.size(); ++k) values[k] = re ? s[k].real() : s[k].imag();
        zeros[f] = signed_zeros(values, x);
      } else {
        zeros[f] = squared_zeros(re ? re2.row(f) : im2.row(f), x, options.minimum_fraction);
      }
    }
    link_frames(branch, zeros, times, max_jump, set.curves);
  }
  return set;
}

}  // namespace qsim1d
