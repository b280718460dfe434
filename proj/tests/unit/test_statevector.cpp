#include <random>

#include "doctest.h"
#include "qsim1d/errors.hpp"
#include "qsim1d/gates.hpp"
#include "test_helpers.hpp"

using namespace qsim1d;
using qsim1d::test::dense_apply;
using qsim1d::test::dense_gate;
using qsim1d::test::max_diff;
using qsim1d::test::random_gate;
using qsim1d::test::random_state;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("basis_state") {
  auto s = basis_state(1, 0);
  CHECK(s.size() == 2);
  CHECK(s[0] == Complex{1.0});
  CHECK(s[1] == Complex{0.0});

  auto s5 = basis_state(3, 5);
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(s5[k]) == (k == 5 ? 1.0 : 0.0));

  CHECK_THROWS_AS(basis_state(2, 4), DomainError);
}

TEST_CASE("from_amplitudes rejects sizes that are not powers of two") {
  CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(StateVector::from_amplitudes({1.0}), DomainError);
}

TEST_CASE("hadamard on single qubit basis states") {
  auto zero = basis_state(1, 0);
  apply_hadamard(zero, 0);
  CHECK(std::abs(zero[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(zero[1] - kInvSqrt2) < 1e-15);

  auto one = basis_state(1, 1);
  apply_hadamard(one, 0);
  CHECK(std::abs(one[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(one[1] + kInvSqrt2) < 1e-15);
}

TEST_CASE("hadamard is self-inverse on random states") {
  std::mt19937_64 rng(11);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto s0 = random_state(n, rng);
    for (Qubit q = 0; q < n; ++q) {
      auto s = s0;
      apply_hadamard(s, q);
      apply_hadamard(s, q);
      CHECK(max_abs_difference(s, s0) < 1e-12);
    }
  }
}

TEST_CASE("phase shift") {
  const Complex a{0.6, 0.0}, b{0.0, 0.8};
  auto s = StateVector::from_amplitudes({a, b});
  apply_phase_shift(s, 0, 0.7);
  CHECK(std::abs(s[0] - a) < 1e-15);
  CHECK(std::abs(s[1] - b * std::polar(1.0, 0.7)) < 1e-15);

  std::mt19937_64 rng(3);
  const auto r = random_state(3, rng);
  auto id = r;
  apply_phase_shift(id, 1, 0.0);
  CHECK(max_abs_difference(id, r) == 0.0);
  auto full = r;
  apply_phase_shift(full, 2, 2 * M_PI);
  CHECK(max_abs_difference(full, r) < 1e-12);
  auto back = r;
  apply_phase_shift(back, 0, 1.3);
  apply_phase_shift(back, 0, -1.3);
  CHECK(max_abs_difference(back, r) < 1e-15);
}

// Two-qubit kets are written |q1 q0>, so "control = left qubit" means control = qubit 1.
TEST_CASE("cnot truth table") {
  auto s10 = basis_state(2, 0b10);
  apply_cnot(s10, 1, 0);
  CHECK(std::abs(s10[0b11]) == 1.0);

  auto s01 = basis_state(2, 0b01);
  apply_cnot(s01, 1, 0);
  CHECK(std::abs(s01[0b01]) == 1.0);

  std::mt19937_64 rng(5);
  const auto r = random_state(4, rng);
  auto twice = r;
  apply_cnot(twice, 3, 1);
  apply_cnot(twice, 3, 1);
  CHECK(max_abs_difference(twice, r) == 0.0);
}

TEST_CASE("cphase") {
  const double d = 0.9;
  auto s11 = basis_state(2, 0b11);
  apply_cphase(s11, 1, 0, d);
  CHECK(std::abs(s11[3] - std::polar(1.0, d)) < 1e-15);

  auto s10 = basis_state(2, 0b10);
  apply_cphase(s10, 1, 0, d);
  CHECK(s10[2] == Complex{1.0});

  std::mt19937_64 rng(8);
  const auto r = random_state(5, rng);
  auto a = r, b = r;
  apply_cphase(a, 4, 1, d);
  apply_cphase(b, 1, 4, d);
  CHECK(max_abs_difference(a, b) == 0.0);
}

TEST_CASE("multi-controlled phase pair selects only the matching block") {
  const double f0 = 0.4, f1 = -1.1;
  std::vector<Complex> uniform(8, 1.0 / std::sqrt(8.0));
  auto s = StateVector::from_amplitudes(uniform);
  const std::vector<ControlBit> controls{{2, false}, {1, false}};
  apply_multi_controlled_phase_pair(s, controls, 0, f0, f1);
  CHECK(std::abs(s[0] - uniform[0] * std::polar(1.0, f0)) < 1e-15);
  CHECK(std::abs(s[1] - uniform[1] * std::polar(1.0, f1)) < 1e-15);
  for (std::size_t k = 2; k < 8; ++k) CHECK(s[k] == uniform[k]);

  std::mt19937_64 rng(9);
  const auto r = random_state(3, rng);
  auto id = r;
  apply_multi_controlled_phase_pair(id, controls, 0, 0.0, 0.0);
  CHECK(max_abs_difference(id, r) == 0.0);
}

TEST_CASE("every gate kind matches its dense matrix") {
  std::mt19937_64 rng(2024);
  for (unsigned n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto gate = random_gate(n, rng);
      const auto s0 = random_state(n, rng);
      auto s = s0;
      qsim1d::apply(s, gate);
      const auto expected = dense_apply(dense_gate(gate, n), s0);
      INFO(to_string(gate));
      CHECK(max_diff(s.amplitudes(), expected) < 1e-12);
    }
  }
}

TEST_CASE("conditioned kernels act only on the selected branch") {
  // A gate on qubits 0..3 of a 5-qubit register, conditioned on qubit 4 reading 1,
  // must equal the unconditioned gate on that half and leave the other half alone.
  std::mt19937_64 rng(31);
  const unsigned n = 4;
  for (int trial = 0; trial < 50; ++trial) {
    const auto gate = random_gate(n, rng);
    const auto s0 = random_state(n + 1, rng);
    auto s = s0;
    qsim1d::apply(s, gate, Condition{Index{1} << n, Index{1} << n});
    auto unconditioned = s0;
    qsim1d::apply(unconditioned, gate);
    for (std::size_t k = 0; k < s.size(); ++k) {
      const Complex expected = ((k >> n) & 1u) ? unconditioned[k] : s0[k];
      CHECK(std::abs(s[k] - expected) < 1e-13);
    }
  }
}

TEST_CASE("diagonal gates preserve moduli and all gates preserve the norm") {
  std::mt19937_64 rng(77);
  const unsigned n = 6;
  auto s = random_state(n, rng);
  for (int i = 0; i < 10000; ++i) {
    const auto gate = random_gate(n, rng);
    if (is_diagonal(gate)) {
      const auto before = s.probabilities();
      qsim1d::apply(s, gate);
      const auto after = s.probabilities();
      for (std::size_t k = 0; k < before.size(); ++k) REQUIRE(std::abs(before[k] - after[k]) < 1e-14);
    } else {
      qsim1d::apply(s, gate);
    }
  }
  CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
  CHECK(std::abs(inner_product(s, s) - 1.0) < 1e-9);
}

TEST_CASE("inner products of basis states") {
  CHECK(inner_product(basis_state(3, 4), basis_state(3, 4)) == Complex{1.0});
  CHECK(inner_product(basis_state(1, 0), basis_state(1, 1)) == Complex{0.0});
  const auto a = StateVector::from_amplitudes({Complex{0, 1}, 0.0});
  const auto b = StateVector::from_amplitudes({1.0, 0.0});
  CHECK(std::abs(inner_product(a, b) - Complex{0, -1}) < 1e-15);
}

TEST_CASE("distance up to a global phase ignores the phase") {
  std::mt19937_64 rng(4);
  const auto a = random_state(4, rng);
  auto b = a;
  for (auto& c : b.amplitudes()) c *= std::polar(1.0, 2.1);
  CHECK(distance_up_to_global_phase(a, b) < 1e-14);
  CHECK(max_abs_difference(a, b) > 0.1);
}

TEST_CASE("gate validation") {
  CHECK_THROWS_AS(validate(GateOp{Hadamard{3}}, 3), DomainError);
  CHECK_THROWS_AS(validate(GateOp{Cnot{1, 1}}, 3), DomainError);
  CHECK_THROWS_AS(validate(GateOp{MultiControlledPhasePair{{{0, true}}, 0, 0.0, 0.0}}, 2),
                  DomainError);
  CHECK_NOTHROW(validate(GateOp{CPhase{0, 2, 1.0}}, 3));
  auto s = basis_state(2, 0);
  CHECK_THROWS_AS(qsim1d::apply(s, GateOp{Hadamard{2}}), DomainError);
}

TEST_CASE("conjugated circuits produce the conjugate state") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 5;
    Circuit c;
    for (int i = 0; i < 60; ++i) c.push_back(random_gate(n, rng));
    auto s = basis_state(n, 0);
    qsim1d::apply(s, c);
    auto sc = basis_state(n, 0);
    qsim1d::apply(sc, conjugate(c));
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(std::abs(sc[k] - std::conj(s[k])) < 1e-12);

    auto round = random_state(n, rng);
    const auto start = round;
    qsim1d::apply(round, c);
    qsim1d::apply(round, inverse(c));
    CHECK(max_abs_difference(round, start) < 1e-12);
  }
}
