#include "qsim1d/oracle.hpp"

#include <fftw3.h>

#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "qsim1d/errors.hpp"
#include "qsim1d/evolution.hpp"

namespace qsim1d::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_limit(unsigned n, unsigned limit, const char* what) {
  if (n > limit) {
    throw ResourceError(std::string(what) + " is limited to " + std::to_string(limit) +
                        " qubits, got " + std::to_string(n));
  }
}

// Signed momentum index, recomputed here so the references do not route
// through the gate-path helpers.
double wrapped(std::size_t l, std::size_t n_points) {
  return l < n_points / 2 ? static_cast<double>(l)
                          : static_cast<double>(l) - static_cast<double>(n_points);
}

std::vector<double> kinetic_energies(const SpatialGrid& grid, const EvolutionParams& params,
                                     double twist) {
  const std::size_t n_points = grid.size();
  const double dp = kTwoPi * params.hbar / grid.length();
  std::vector<double> energies(n_points);
  for (std::size_t l = 0; l < n_points; ++l) {
    const double p = dp * wrapped(l, n_points) + params.hbar * twist / grid.length();
    energies[l] = p * p / (2.0 * params.mass);
  }
  return energies;
}

struct FftwPlanDeleter {
  void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};
using FftwPlan = std::unique_ptr<fftw_plan_s, FftwPlanDeleter>;

}  // namespace

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), data_(dim * dim) {}

DenseOperator DenseOperator::identity(std::size_t dim) {
  DenseOperator op(dim);
  for (std::size_t i = 0; i < dim; ++i) op(i, i) = 1.0;
  return op;
}

std::vector<Complex> DenseOperator::apply(std::span<const Complex> v) const {
  if (v.size() != dim_) throw DomainError("vector size does not match the operator");
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex sum{};
    const Complex* row = &data_[r * dim_];
    for (std::size_t c = 0; c < dim_; ++c) sum += row[c] * v[c];
    out[r] = sum;
  }
  return out;
}

StateVector DenseOperator::apply(const StateVector& state) const {
  return StateVector::from_amplitudes(apply(state.amplitudes()));
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

DenseOperator DenseOperator::operator*(const DenseOperator& rhs) const {
  if (rhs.dim_ != dim_) throw DomainError("operator dimensions differ");
  DenseOperator out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double DenseOperator::unitarity_error() const {
  const DenseOperator product = adjoint() * (*this);
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex expected = r == c ? Complex{1.0} : Complex{};
      worst = std::max(worst, std::abs(product(r, c) - expected));
    }
  }
  return worst;
}

Complex DenseOperator::expectation(const StateVector& state) const {
  const auto applied = apply(state.amplitudes());
  Complex sum{};
  for (std::size_t k = 0; k < dim_; ++k) sum += std::conj(state[k]) * applied[k];
  return sum / state.norm_squared();
}

DenseOperator dft_matrix(unsigned n) {
  if (n < 1) throw DomainError("DFT needs at least one qubit");
  check_limit(n, kMaxDftQubits, "dense DFT");
  const std::size_t dim = std::size_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  DenseOperator op(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t k = 0; k < dim; ++k) {
      // Reduce k*l mod N first so the angle stays exact for large N.
      const double angle = kTwoPi * static_cast<double>((k * l) % dim) / static_cast<double>(dim);
      op(l, k) = std::polar(scale, angle);
    }
  }
  return op;
}

DenseOperator hamiltonian_matrix(const Potential& potential, const SpatialGrid& grid,
                                 const EvolutionParams& params) {
  check_limit(grid.num_qubits(), kMaxPropagatorQubits, "dense Hamiltonian");
  const std::size_t dim = grid.size();
  const double twist = potential.twist;
  const auto energies = kinetic_energies(grid, params, twist);

  // Circulant kernel c(m) = (1/N) sum_l e^{2 pi i l m / N} T_l.
  std::vector<Complex> kernel(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    Complex sum{};
    for (std::size_t l = 0; l < dim; ++l) {
      sum += std::polar(energies[l], kTwoPi * static_cast<double>((l * m) % dim) /
                                         static_cast<double>(dim));
    }
    kernel[m] = sum / static_cast<double>(dim);
  }

  DenseOperator h(dim);
  const double gauge_rate = twist * grid.delta() / grid.length();
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const auto diff = static_cast<long long>(a) - static_cast<long long>(b);
      const std::size_t m = (a + dim - b) % dim;
      h(a, b) = std::polar(1.0, gauge_rate * static_cast<double>(diff)) * kernel[m];
    }
    h(a, a) += potential(grid.x(a));
  }
  return h;
}

Spectrum spectrum(const Potential& potential, const SpatialGrid& grid,
                  const EvolutionParams& params) {
  const DenseOperator h = hamiltonian_matrix(potential, grid, params);
  const auto dim = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = h(r, c);
  }
  // Enforce exact hermiticity before the solver reads the lower triangle.
  m = (0.5 * (m + m.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hamiltonian diagonalization failed");

  Spectrum out{std::vector<double>(h.dim()), DenseOperator(h.dim())};
  for (Eigen::Index i = 0; i < dim; ++i) {
    out.energies[i] = solver.eigenvalues()(i);
    for (Eigen::Index r = 0; r < dim; ++r) out.eigenvectors(r, i) = solver.eigenvectors()(r, i);
  }
  return out;
}

DenseOperator exact_propagator(const Spectrum& spec, double t, double hbar) {
  const std::size_t dim = spec.energies.size();
  DenseOperator u(dim);
  std::vector<Complex> phases(dim);
  for (std::size_t i = 0; i < dim; ++i) phases[i] = std::polar(1.0, -spec.energies[i] * t / hbar);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Complex sum{};
      for (std::size_t i = 0; i < dim; ++i) {
        sum += spec.eigenvectors(r, i) * phases[i] * std::conj(spec.eigenvectors(c, i));
      }
      u(r, c) = sum;
    }
  }
  return u;
}

DenseOperator exact_propagator(const Potential& potential, const SpatialGrid& grid, double t,
                               const EvolutionParams& params) {
  return exact_propagator(spectrum(potential, grid, params), t, params.hbar);
}

std::vector<std::vector<Complex>> split_operator_reference(std::span<const Complex> psi0,
                                                           const Potential& potential,
                                                           const SpatialGrid& grid,
                                                           const EvolutionParams& params) {
  const std::size_t dim = grid.size();
  if (psi0.size() != dim) throw DomainError("initial array does not match the grid");
  if (params.snapshot_stride == 0) throw DomainError("snapshot_stride must be >= 1");

  std::vector<Complex> psi(psi0.begin(), psi0.end());
  std::vector<std::vector<Complex>> trajectory{psi};
  if (params.steps == 0) return trajectory;

  const double eps = params.epsilon;
  const double hbar = params.hbar;
  const double twist = potential.twist;
  std::vector<Complex> potential_phase(dim);
  std::vector<Complex> gauge(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double x = grid.x(k);
    potential_phase[k] = std::polar(1.0, -potential(x) * eps / hbar);
    gauge[k] = std::polar(1.0, twist * x / grid.length());
  }
  const auto energies = kinetic_energies(grid, params, twist);
  std::vector<Complex> kinetic_phase(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    kinetic_phase[l] = std::polar(1.0 / static_cast<double>(dim), -energies[l] * eps / hbar);
  }

  auto* buffer = reinterpret_cast<fftw_complex*>(psi.data());
  const int size = static_cast<int>(dim);
  FftwPlan forward(fftw_plan_dft_1d(size, buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE));
  FftwPlan backward(fftw_plan_dft_1d(size, buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE));
  if (!forward || !backward) throw std::runtime_error("FFTW plan creation failed");

  trajectory.reserve(params.steps / params.snapshot_stride + 2);
  for (std::size_t s = 1; s <= params.steps; ++s) {
    for (std::size_t k = 0; k < dim; ++k) psi[k] *= potential_phase[k] * std::conj(gauge[k]);
    fftw_execute(forward.get());
    for (std::size_t l = 0; l < dim; ++l) psi[l] *= kinetic_phase[l];
    fftw_execute(backward.get());
    for (std::size_t k = 0; k < dim; ++k) psi[k] *= gauge[k];
    if (s % params.snapshot_stride == 0 || s == params.steps) trajectory.push_back(psi);
  }
  return trajectory;
}

}  // namespace qsim1d::oracle

namespace qsim1d {

double trotter_error(const StateVector& initial, const Potential& potential,
                     const SpatialGrid& grid, const EvolutionParams& params) {
  if (grid.num_qubits() > oracle::kMaxPropagatorQubits) {
    throw ResourceError("trotter_error needs the dense propagator; n <= 8");
  }
  EvolutionParams run = params;
  run.snapshot_stride = std::max<std::size_t>(params.steps, 1);
  const StateVector trotter = evolve(initial, potential, grid, run).back();
  const double t = static_cast<double>(params.steps) * params.epsilon;
  const StateVector exact = oracle::exact_propagator(potential, grid, t, params).apply(initial);
  double sum = 0.0;
  for (std::size_t k = 0; k < trotter.size(); ++k) sum += std::norm(trotter[k] - exact[k]);
  return std::sqrt(sum);
}

}  // namespace qsim1d
