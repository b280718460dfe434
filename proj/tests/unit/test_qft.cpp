#include <random>

#include "doctest.h"
#include "qsim1d/oracle.hpp"
#include "qsim1d/qft.hpp"
#include "test_helpers.hpp"

using namespace qsim1d;
using qsim1d::test::max_diff;
using qsim1d::test::random_state;

TEST_CASE("gate counts") {
  CHECK(gate_count(1).hadamards == 1);
  CHECK(gate_count(1).cphases == 0);
  CHECK(gate_count(4).hadamards == 4);
  CHECK(gate_count(4).cphases == 6);
  CHECK(gate_count(10).hadamards == 10);
  CHECK(gate_count(10).cphases == 45);

  for (unsigned n = 1; n <= 10; ++n) {
    for (bool inv : {false, true}) {
      const auto plan = build_qft_plan(n, inv);
      const auto counted = count_gates(plan);
      CHECK(counted.hadamards == n);
      CHECK(counted.cphases == n * (n - 1) / 2);
      CHECK(plan.gates.size() == n + n * (n - 1) / 2);
    }
    const auto swapped = build_qft_plan(n, false, QftReversal::SwapGates);
    CHECK(swapped.gates.size() == n + n * (n - 1) / 2 + 3 * (n / 2));
  }
}

TEST_CASE("n = 1 plan is a single hadamard") {
  const auto plan = build_qft_plan(1, false);
  REQUIRE(plan.gates.size() == 1);
  CHECK(std::holds_alternative<Hadamard>(plan.gates[0]));
}

TEST_CASE("cphase angles are 2 pi / 2^k") {
  const unsigned n = 6;
  const auto plan = build_qft_plan(n, false);
  for (const auto& g : plan.gates) {
    if (const auto* c = std::get_if<CPhase>(&g)) {
      const double k = std::log2(2 * M_PI / c->delta);
      CHECK(std::abs(k - std::round(k)) < 1e-12);
      CHECK(std::round(k) >= 2);
      CHECK(std::round(k) <= n);
    }
  }
}

TEST_CASE("qft of |0> is uniform and of a basis state has equal moduli") {
  for (unsigned n = 1; n <= 8; ++n) {
    auto s = basis_state(n, 0);
    apply_qft(s);
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(std::abs(s[k] - 1.0 / std::sqrt(static_cast<double>(s.size()))) < 1e-12);
    }
    auto b = basis_state(n, (Index{1} << n) - 1);
    apply_qft(b);
    for (std::size_t k = 0; k < b.size(); ++k) {
      CHECK(std::abs(std::abs(b[k]) - 1.0 / std::sqrt(static_cast<double>(b.size()))) < 1e-12);
    }
  }
}

TEST_CASE("qft of |001> gives eighth roots of unity") {
  auto s = basis_state(3, 1);
  apply_qft(s);
  for (std::size_t l = 0; l < 8; ++l) {
    const Complex expected = std::polar(1.0 / std::sqrt(8.0), 2 * M_PI * static_cast<double>(l) / 8.0);
    CHECK(std::abs(s[l] - expected) < 1e-14);
  }
}

TEST_CASE("qft matches the dense DFT in both reversal modes") {
  std::mt19937_64 rng(1);
  for (unsigned n = 1; n <= 8; ++n) {
    const auto F = oracle::dft_matrix(n);
    const auto Finv = F.adjoint();
    for (int trial = 0; trial < 5; ++trial) {
      const auto s0 = random_state(n, rng);
      for (auto mode : {QftReversal::IndexRelabel, QftReversal::SwapGates}) {
        auto fwd = s0;
        apply_qft(fwd, false, mode);
        CHECK(max_diff(fwd.amplitudes(), F.apply(s0).amplitudes()) < 1e-10);
        auto inv = s0;
        apply_qft(inv, true, mode);
        CHECK(max_diff(inv.amplitudes(), Finv.apply(s0).amplitudes()) < 1e-10);
      }
    }
  }
}

TEST_CASE("forward then inverse is the identity up to n = 12") {
  std::mt19937_64 rng(12);
  for (unsigned n = 1; n <= 12; ++n) {
    const auto s0 = random_state(n, rng);
    auto s = s0;
    apply_qft(s);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
    apply_qft(s, true);
    CHECK(max_abs_difference(s, s0) < 1e-10);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto s0 = random_state(3, rng);
    auto s = s0;
    apply_plan(s, build_qft_plan(3, false));
    apply_plan(s, build_qft_plan(3, true));
    CHECK(max_abs_difference(s, s0) < 1e-10);
  }
}

TEST_CASE("bit reversal helpers") {
  CHECK(reverse_bits(0b001, 3) == 0b100);
  CHECK(reverse_bits(0b110, 3) == 0b011);
  CHECK(reverse_bits(0b1011, 4) == 0b1101);
  const auto m = reversed_qubit_mapping(4);
  CHECK(m == std::vector<Qubit>{3, 2, 1, 0});
  auto s = basis_state(4, 0b0001);
  reverse_qubit_order(s);
  CHECK(std::abs(s[0b1000]) == 1.0);
}
