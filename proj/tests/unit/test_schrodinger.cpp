#include <numbers>
#include <random>

#include "doctest.h"
#include "qsim1d/errors.hpp"
#include "qsim1d/evolution.hpp"
#include "qsim1d/oracle.hpp"
#include "qsim1d/wavepacket.hpp"
#include "test_helpers.hpp"

using namespace qsim1d;
using qsim1d::test::random_state;
using std::numbers::pi;

TEST_CASE("spatial grid") {
  const SpatialGrid g(5, 3.0);
  CHECK(g.delta() == 6.0 / 32.0);
  for (Index k = 0; k < g.size(); ++k) {
    CHECK(std::abs(g.x(k) - (-3.0 + (static_cast<double>(k) + 0.5) * g.delta())) < 1e-15);
  }
  CHECK(std::abs(g.x(0) + g.x(31)) < 1e-15);
  CHECK_THROWS_AS(SpatialGrid(3, 0.0), DomainError);
  CHECK_THROWS_AS(SpatialGrid(3, -1.0), DomainError);
}

TEST_CASE("momentum grid wraps at N/2") {
  const SpatialGrid g(3, 2.0);
  const MomentumGrid p(g, 1.0);
  const std::vector<long long> expected{0, 1, 2, 3, -4, -3, -2, -1};
  for (Index l = 0; l < 8; ++l) CHECK(MomentumGrid::signed_index(l, 3) == expected[l]);
  CHECK(std::abs(p.spacing() - 2 * pi / 4.0) < 1e-15);
  CHECK(std::abs(p.p(5) + 3 * p.spacing()) < 1e-15);
}

TEST_CASE("discretize") {
  const SpatialGrid g(3, 1.0);
  const auto flat = discretize([](double) { return Complex{2.0}; }, g);
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(flat.state[k] - 1.0 / std::sqrt(8.0)) < 1e-15);
  CHECK(std::abs(flat.norm_factor - std::sqrt(32.0)) < 1e-12);

  const double x2 = g.x(2);
  const auto spike = discretize([&](double x) { return std::abs(x - x2) < 1e-9 ? Complex{0.3} : 0.0; }, g);
  CHECK(std::abs(spike.state[2] - 1.0) < 1e-15);

  CHECK_THROWS_AS(discretize([](double) { return Complex{0.0}; }, g), DegenerateInputError);

  const SpatialGrid g6(6, 8.0);
  const auto gauss = prepare(Gaussian{0.0, 0.0, 1.0}, g6);
  CHECK(std::abs(gauss.state.norm_squared() - 1.0) < 1e-12);
  CHECK(std::abs(mean_position(gauss.state, g6)) < g6.delta());
}

TEST_CASE("prepared packets") {
  const SpatialGrid g(6, 10.0);
  const auto still = prepare(Gaussian{0.0, 0.0, 1.5}, g);
  for (Index k = 0; k < g.size(); ++k) {
    CHECK(std::abs(still.state[k].imag()) == 0.0);
    CHECK(still.state[k].real() >= 0.0);
    CHECK(std::abs(still.state[k] - still.state[g.size() - 1 - k]) < 1e-12);
  }

  const double sc = coherent_width(1.0, 1.0);
  CHECK(std::abs(sc - std::sqrt(0.5)) < 1e-15);
  const SpatialGrid fine(9, 10.0);
  const auto sq = prepare(Squeezed{0.0, 0.0, 2.0, 1.0, 1.0}, fine);
  CHECK(std::abs(std::sqrt(position_variance(sq.state, fine)) - 2.0 * sc) < 1e-6);

  const auto two = prepare(TwoPacket{{-3.0, 2.0, 0.7}, {3.0, -2.0, 0.7}, 0.0}, g);
  CHECK(std::abs(two.state.norm_squared() - 1.0) < 1e-12);
  CHECK(std::abs(mean_position(two.state, g)) < g.delta());

  const auto clipped = prepare(Gaussian{9.0, 0.0, 1.0}, g);
  CHECK(clipped.tail_mass > kTailMassWarning);
  CHECK(clipped.warnings.size() == 1);
  CHECK(still.warnings.empty());
}

TEST_CASE("potential step") {
  std::mt19937_64 rng(1);
  const SpatialGrid g(6, 10.0);
  EvolutionParams params;
  params.epsilon = 0.05;

  const auto s0 = random_state(6, rng);
  auto free = s0;
  potential_step(free, Potential{}, g, params);
  CHECK(max_abs_difference(free, s0) < 1e-15);

  const Potential harmonic{Harmonic{1.3, 0.8}};
  for (auto route : {DiagonalRoute::Quadratic, DiagonalRoute::GenericCircuit}) {
    auto a = s0, b = s0;
    params.potential_route = route;
    potential_step(a, harmonic, g, params);
    params.potential_route = DiagonalRoute::Direct;
    potential_step(b, harmonic, g, params);
    CHECK(max_abs_difference(a, b) < 1e-10);
  }

  const double v0 = 2.5;
  const Potential barrier{SquareBarrier{v0, -1.0, 2.0}};
  params.potential_route = DiagonalRoute::Auto;
  auto s = s0;
  potential_step(s, barrier, g, params);
  for (Index k = 0; k < g.size(); ++k) {
    const bool inside = g.x(k) >= -1.0 && g.x(k) <= 2.0;
    const Complex expected = inside ? s0[k] * std::polar(1.0, -v0 * params.epsilon) : s0[k];
    CHECK(std::abs(s[k] - expected) < 1e-12);
  }

  params.potential_route = DiagonalRoute::Quadratic;
  CHECK_THROWS_AS(build_potential_circuit(barrier, g, params), ConstructionError);
}

TEST_CASE("kinetic step") {
  const SpatialGrid g(6, 5.0);
  EvolutionParams params;
  params.epsilon = 0.03;
  std::mt19937_64 rng(2);

  // Plane waves on the grid are eigenstates of the discrete kinetic operator.
  const MomentumGrid mg(g, params.hbar);
  for (Index l : {Index{0}, Index{3}, Index{31}, Index{32}, Index{60}}) {
    const auto wave = discretize([&](double x) { return std::polar(1.0, mg.p(l) * x); }, g);
    auto s = wave.state;
    kinetic_step(s, g, params);
    CHECK(distance_up_to_global_phase(s, wave.state) < 1e-9);
    const Complex expected_phase =
        std::polar(1.0, -mg.p(l) * mg.p(l) * params.epsilon / (2 * params.mass * params.hbar));
    CHECK(std::abs(inner_product(wave.state, s) - expected_phase) < 1e-9);
  }

  params.epsilon = 0.0;
  const auto s0 = random_state(6, rng);
  auto same = s0;
  kinetic_step(same, g, params);
  CHECK(max_abs_difference(same, s0) < 1e-12);

  params.epsilon = 0.07;
  for (auto reversal : {QftReversal::IndexRelabel, QftReversal::SwapGates}) {
    for (auto route : {DiagonalRoute::Quadratic, DiagonalRoute::GenericCircuit}) {
      params.reversal = reversal;
      params.kinetic_route = route;
      auto a = s0, b = s0;
      kinetic_step(a, g, params, 0.8);
      params.kinetic_route = DiagonalRoute::Direct;
      kinetic_step(b, g, params, 0.8);
      CHECK(max_abs_difference(a, b) < 1e-10);
    }
  }
}

TEST_CASE("free Gaussian spreading follows the analytic width") {
  const SpatialGrid g(8, 16.0);
  const double sigma = 1.0;
  const auto psi0 = prepare(Gaussian{0.0, 0.5, sigma}, g).state;
  EvolutionParams params;
  params.epsilon = 0.05;
  params.steps = 80;
  params.snapshot_stride = 20;
  const auto traj = evolve(psi0, Potential{}, g, params);
  REQUIRE(traj.size() == 5);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = static_cast<double>(i * 20) * params.epsilon;
    const double expected = sigma * sigma * (1 + std::pow(t / (2 * sigma * sigma), 2));
    CHECK(std::abs(position_variance(traj[i], g) / expected - 1.0) < 0.02);
  }
}

TEST_CASE("harmonic coherent state returns after one period") {
  const SpatialGrid g(6, 8.0);
  const double omega = 1.0;
  const double period = 2 * pi / omega;
  const auto psi0 = prepare(Squeezed{3.0, 0.0, 1.0, 1.0, omega}, g).state;
  EvolutionParams params;
  params.epsilon = period / 100;
  params.steps = 100;
  params.snapshot_stride = 100;
  const auto traj = evolve(psi0, Potential{Harmonic{1.0, omega}}, g, params);
  CHECK(std::norm(inner_product(traj.front(), traj.back())) > 0.99);
}

TEST_CASE("uniform force follows the classical trajectory") {
  const SpatialGrid g(6, 10.0);
  const double force = 1.0, x0 = -5.0;
  const auto psi0 = prepare(Gaussian{x0, 0.0, 1.0}, g).state;
  EvolutionParams params;
  params.epsilon = 0.0125;
  params.steps = 280;
  params.snapshot_stride = 10;
  const auto traj = evolve(psi0, Potential{Linear{force}}, g, params);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = static_cast<double>(i * 10) * params.epsilon;
    CHECK(std::abs(mean_position(traj[i], g) - (x0 + 0.5 * force * t * t)) < 2 * g.delta());
  }
}

TEST_CASE("norm conservation and parity") {
  const SpatialGrid g(6, 8.0);
  const auto psi0 = prepare(Gaussian{0.0, 0.0, 0.9}, g).state;
  EvolutionParams params;
  params.epsilon = 0.02;
  params.steps = 300;
  params.snapshot_stride = 10;
  const Potential pot{Harmonic{1.0, 1.4}};
  for (const auto& s : evolve(psi0, pot, g, params)) {
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
    for (Index k = 0; k < g.size(); ++k) {
      CHECK(std::abs(std::norm(s[k]) - std::norm(s[g.size() - 1 - k])) < 1e-8);
    }
  }
}

TEST_CASE("periodic wraparound") {
  const SpatialGrid g(7, 10.0);
  const auto psi0 = prepare(Gaussian{5.0, 3.0, 1.0}, g).state;
  EvolutionParams params;
  params.epsilon = 0.01;
  params.steps = 340;
  params.snapshot_stride = 340;
  const auto traj = evolve(psi0, Potential{}, g, params);
  auto left_half = [&](const StateVector& s) {
    double p = 0.0;
    for (Index k = 0; k < g.size() / 2; ++k) p += std::norm(s[k]);
    return p;
  };
  CHECK(left_half(traj.front()) < 0.01);
  CHECK(left_half(traj.back()) > 0.9);
}

TEST_CASE("hard walls confine the packet") {
  const SpatialGrid g(7, 10.0);
  EvolutionParams params;
  params.epsilon = 0.01;
  params.steps = 600;
  params.snapshot_stride = 10;
  const Potential walls{HardWalls{max_wall_height(params.epsilon, params.hbar), -6.0, 6.0}};
  const auto psi0 = prepare(Gaussian{0.0, 2.0, 0.8}, g).state;
  double worst = 0.0;
  for (const auto& s : evolve(psi0, walls, g, params)) {
    double outside = 0.0;
    for (Index k = 0; k < g.size(); ++k) {
      if (g.x(k) < -6.0 || g.x(k) > 6.0) outside += std::norm(s[k]);
    }
    worst = std::max(worst, outside);
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("twist: zero flux is untouched, full flux is gauge-equivalent") {
  std::mt19937_64 rng(3);
  const SpatialGrid g(6, 5.0);
  EvolutionParams params;
  params.epsilon = 0.02;
  params.steps = 50;
  params.snapshot_stride = 50;
  const auto psi0 = random_state(6, rng);

  Potential untwisted{Harmonic{1.0, 1.0}};
  Potential zero = untwisted;
  zero.twist = 0.0;
  CHECK(max_abs_difference(evolve(psi0, untwisted, g, params).back(),
                           evolve(psi0, zero, g, params).back()) == 0.0);

  Potential full = untwisted;
  full.twist = 2 * pi;
  CHECK(max_abs_difference(evolve(psi0, full, g, params).back(),
                           evolve(psi0, zero, g, params).back()) < 1e-9);

  Potential half = untwisted;
  half.twist = pi;
  CHECK(max_abs_difference(evolve(psi0, half, g, params).back(),
                           evolve(psi0, zero, g, params).back()) > 1e-3);
}

TEST_CASE("twisted plane wave satisfies the twisted boundary condition") {
  // e^{i q x} with q = (2 pi m + phi) / L is an eigenstate of the twisted kinetic step.
  const SpatialGrid g(6, 4.0);
  EvolutionParams params;
  params.epsilon = 0.05;
  const double phi = 1.1;
  const double q = (2 * pi * 3 + phi) / g.length();
  const auto wave = discretize([&](double x) { return std::polar(1.0, q * x); }, g);
  auto s = wave.state;
  kinetic_step(s, g, params, phi);
  const Complex expected = std::polar(1.0, -q * q * params.epsilon / 2.0);
  CHECK(std::abs(inner_product(wave.state, s) - expected) < 1e-9);
  CHECK(distance_up_to_global_phase(s, wave.state) < 1e-9);
}

TEST_CASE("trotter error") {
  std::mt19937_64 rng(4);
  const SpatialGrid g(5, 5.0);
  const auto psi0 = prepare(Gaussian{1.0, 0.5, 0.8}, g).state;
  EvolutionParams params;
  params.epsilon = 0.1;
  params.steps = 10;
  CHECK(trotter_error(psi0, Potential{}, g, params) < 1e-10);

  std::vector<double> errors;
  for (int i = 0; i < 4; ++i) {
    params.epsilon = 0.1 / std::pow(2.0, i);
    params.steps = 10u << i;
    errors.push_back(trotter_error(psi0, Potential{Harmonic{1.0, 1.0}}, g, params));
  }
  for (std::size_t i = 1; i < errors.size(); ++i) CHECK(errors[i] < errors[i - 1]);
}

TEST_CASE("energy drift over one period") {
  const SpatialGrid g(6, 8.0);
  const double period = 2 * pi;
  const Potential pot{Harmonic{1.0, 1.0}};
  EvolutionParams params;
  params.epsilon = period / 200;
  params.steps = 200;
  params.snapshot_stride = 10;
  const auto H = oracle::hamiltonian_matrix(pot, g, params);
  const auto psi0 = prepare(Squeezed{1.0, 0.0, 1.0, 1.0, 1.0}, g).state;
  const double e0 = H.expectation(psi0).real();
  for (const auto& s : evolve(psi0, pot, g, params)) {
    CHECK(std::abs(H.expectation(s).real() / e0 - 1.0) < 0.01);
  }
}

TEST_CASE("evolve snapshots and validation") {
  const SpatialGrid g(4, 3.0);
  const auto psi0 = basis_state(4, 3);
  EvolutionParams params;
  params.steps = 0;
  const auto none = evolve(psi0, Potential{}, g, params);
  REQUIRE(none.size() == 1);
  CHECK(max_abs_difference(none[0], psi0) == 0.0);

  params.steps = 7;
  params.snapshot_stride = 3;
  CHECK(evolve(psi0, Potential{}, g, params).size() == 4);  // 0, 3, 6, 7

  params.epsilon = -1.0;
  CHECK_THROWS_AS(evolve(psi0, Potential{}, g, params), DomainError);
  params.epsilon = 0.1;
  CHECK_THROWS_AS(evolve(basis_state(3, 0), Potential{}, g, params), DomainError);
}
