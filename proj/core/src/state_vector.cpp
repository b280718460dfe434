#include "qsim1d/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qsim1d/errors.hpp"

namespace qsim1d {

namespace {

void check_qubit_count(unsigned n) {
  if (n < 1) throw DomainError("register needs at least one qubit");
  if (n > kMaxQubits) {
    throw ResourceError("register of " + std::to_string(n) + " qubits exceeds the limit of " +
                        std::to_string(kMaxQubits));
  }
}

void check_same_size(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DomainError("states have different qubit counts (" + std::to_string(a.num_qubits()) +
                      " vs " + std::to_string(b.num_qubits()) + ")");
  }
}

}  // namespace

StateVector::StateVector(unsigned n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(unsigned n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const auto size = amplitudes.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw DomainError("amplitude count " + std::to_string(size) +
                      " is not a power of two >= 2");
  }
  const auto n = static_cast<unsigned>(std::countr_zero(size));
  check_qubit_count(n);
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& c : amplitudes_) sum += std::norm(c);
  return sum;
}

void StateVector::normalize() {
  const double n2 = norm_squared();
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw DegenerateInputError("cannot normalize a zero or non-finite state");
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& c : amplitudes_) c *= scale;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                 [](const Complex& c) { return std::norm(c); });
  return p;
}

StateVector basis_state(unsigned n, Index k) {
  StateVector state(n);
  if (k >= state.size()) {
    throw DomainError("basis index " + std::to_string(k) + " out of range for " +
                      std::to_string(n) + " qubits");
  }
  state[0] = 0.0;
  state[k] = 1.0;
  return state;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  check_same_size(a, b);
  Complex sum{};
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::conj(a[k]) * b[k];
  return sum;
}

double distance_up_to_global_phase(const StateVector& a, const StateVector& b) {
  const Complex overlap = inner_product(b, a);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::norm(a[k] - phase * b[k]);
  return std::sqrt(sum);
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  check_same_size(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace qsim1d
