#include <numbers>
#include <random>

#include "doctest.h"
#include "qsim1d/errors.hpp"
#include "qsim1d/evolution.hpp"
#include "qsim1d/oracle.hpp"
#include "qsim1d/wavepacket.hpp"
#include "test_helpers.hpp"

using namespace qsim1d;
using qsim1d::test::max_diff;
using qsim1d::test::random_state;

TEST_CASE("dft matrix") {
  const auto h = oracle::dft_matrix(1);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(h(0, 0) - r) < 1e-15);
  CHECK(std::abs(h(0, 1) - r) < 1e-15);
  CHECK(std::abs(h(1, 0) - r) < 1e-15);
  CHECK(std::abs(h(1, 1) + r) < 1e-15);
  for (unsigned n = 1; n <= 8; ++n) CHECK(oracle::dft_matrix(n).unitarity_error() < 1e-12);

  const auto f3 = oracle::dft_matrix(3);
  const auto col = f3.apply(basis_state(3, 1));
  for (std::size_t l = 0; l < 8; ++l) {
    CHECK(std::abs(col[l] - std::polar(1.0 / std::sqrt(8.0), 2 * std::numbers::pi * l / 8.0)) < 1e-14);
  }
}

TEST_CASE("exact propagator") {
  const SpatialGrid g(5, 4.0);
  EvolutionParams params;
  const Potential pot{Harmonic{1.0, 1.2}};

  const auto id = oracle::exact_propagator(pot, g, 0.0, params);
  double worst = 0.0;
  for (std::size_t r = 0; r < 32; ++r) {
    for (std::size_t c = 0; c < 32; ++c) worst = std::max(worst, std::abs(id(r, c) - (r == c ? 1.0 : 0.0)));
  }
  CHECK(worst < 1e-12);

  const auto u = oracle::exact_propagator(pot, g, 0.7, params);
  CHECK(u.unitarity_error() < 1e-10);

  // Eigenvectors pick up e^{-i E t / hbar}.
  const auto spec = oracle::spectrum(pot, g, params);
  for (std::size_t j : {std::size_t{0}, std::size_t{3}}) {
    std::vector<Complex> v(32);
    for (std::size_t k = 0; k < 32; ++k) v[k] = spec.eigenvectors(k, j);
    const auto uv = u.apply(v);
    for (std::size_t k = 0; k < 32; ++k) {
      CHECK(std::abs(uv[k] - std::polar(1.0, -spec.energies[j] * 0.7) * v[k]) < 1e-10);
    }
  }

  // Free particle: one kinetic step is exact.
  std::mt19937_64 rng(1);
  params.epsilon = 0.13;
  const auto s0 = random_state(5, rng);
  auto s = s0;
  kinetic_step(s, g, params);
  const auto exact = oracle::exact_propagator(Potential{}, g, params.epsilon, params).apply(s0);
  CHECK(max_abs_difference(s, exact) < 1e-10);

  CHECK_THROWS_AS(oracle::exact_propagator(pot, SpatialGrid(9, 4.0), 1.0, params), ResourceError);
}

TEST_CASE("one Trotter step deviates at second order") {
  const SpatialGrid g(5, 5.0);
  const Potential pot{Harmonic{1.0, 1.0}};
  const auto psi0 = prepare(Gaussian{1.0, 0.0, 0.9}, g).state;
  EvolutionParams params;
  params.steps = 1;
  double previous = 0.0;
  for (int i = 0; i < 4; ++i) {
    params.epsilon = 0.04 / std::pow(2.0, i);
    const double err = trotter_error(psi0, pot, g, params);
    if (i > 0) CHECK(std::abs(previous / err - 4.0) < 0.4);
    previous = err;
  }
}

TEST_CASE("split-operator reference agrees with the gate path") {
  const SpatialGrid g(6, 10.0);
  EvolutionParams params;
  params.epsilon = 0.02;
  params.steps = 100;
  params.snapshot_stride = 10;

  const std::vector<std::pair<Potential, WavepacketSpec>> cases{
      {Potential{}, Gaussian{-2.0, 1.5, 1.0}},
      {Potential{Harmonic{1.0, 1.0}}, Squeezed{3.0, 0.0, 1.0, 1.0, 1.0}},
      {Potential{SquareBarrier{3.0, 0.0, 1.0}, 0.7}, Gaussian{-3.0, 2.0, 1.0}},
  };
  for (const auto& [pot, packet] : cases) {
    const auto psi0 = prepare(packet, g).state;
    const auto gates = evolve(psi0, pot, g, params);
    const auto ref = oracle::split_operator_reference(psi0.amplitudes(), pot, g, params);
    REQUIRE(gates.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(max_diff(gates[i].amplitudes(), ref[i]) < 1e-8);
  }

  params.epsilon = 0.0;
  std::mt19937_64 rng(2);
  const auto s0 = random_state(6, rng);
  for (const auto& snap : oracle::split_operator_reference(s0.amplitudes(), Potential{Harmonic{}}, g, params)) {
    CHECK(max_diff(snap, s0.amplitudes()) < 1e-14);
  }
}
