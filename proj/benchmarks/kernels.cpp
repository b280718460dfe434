#include <benchmark/benchmark.h>

#include <random>

#include "qsim1d/diagonal.hpp"
#include "qsim1d/evolution.hpp"
#include "qsim1d/qft.hpp"
#include "qsim1d/wavepacket.hpp"

using namespace qsim1d;

namespace {

StateVector noise(unsigned n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g;
  std::vector<Complex> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {g(rng), g(rng)};
  auto s = StateVector::from_amplitudes(std::move(amps));
  s.normalize();
  return s;
}

unsigned qubits(const benchmark::State& state) { return static_cast<unsigned>(state.range(0)); }

}  // namespace

static void BM_Hadamard(benchmark::State& state) {
  auto s = noise(qubits(state));
  const Qubit q = qubits(state) / 2;
  for (auto _ : state) {
    apply_hadamard(s, q);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.size()));
}
BENCHMARK(BM_Hadamard)->DenseRange(8, 20, 4);

static void BM_CPhase(benchmark::State& state) {
  auto s = noise(qubits(state));
  for (auto _ : state) {
    apply_cphase(s, 0, qubits(state) - 1, 0.3);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.size()));
}
BENCHMARK(BM_CPhase)->DenseRange(8, 20, 4);

static void BM_MultiControlledPair(benchmark::State& state) {
  const unsigned n = qubits(state);
  auto s = noise(n);
  std::vector<ControlBit> controls;
  for (Qubit q = 1; q < n; ++q) controls.push_back({q, (q & 1u) != 0});
  for (auto _ : state) {
    apply_multi_controlled_phase_pair(s, controls, 0, 0.2, -0.4);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_MultiControlledPair)->DenseRange(8, 20, 4);

static void BM_Qft(benchmark::State& state) {
  auto s = noise(qubits(state));
  const auto mode = state.range(1) == 0 ? QftReversal::IndexRelabel : QftReversal::SwapGates;
  const auto plan = build_qft_plan(qubits(state), false, mode);
  for (auto _ : state) {
    apply_plan(s, plan);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_Qft)->ArgsProduct({{6, 10, 14, 18}, {0, 1}});

static void BM_DiagonalRoutes(benchmark::State& state) {
  const unsigned n = qubits(state);
  auto s = noise(n);
  const QuadraticPhaseSpec spec{0.01, -3.5, 1.0, n, false};
  const Circuit quadratic = build_quadratic_phase_circuit(spec).flatten();
  const PhaseFunction f = [&](Index k) { return quadratic_phase(spec, k); };
  const Circuit generic = build_generic_diagonal_circuit(f, n);
  std::vector<double> table(s.size());
  for (Index k = 0; k < s.size(); ++k) table[k] = f(k);
  for (auto _ : state) {
    switch (state.range(1)) {
      case 0: apply_diagonal_direct(s, table); break;
      case 1: qsim1d::apply(s, generic); break;
      default: qsim1d::apply(s, quadratic); break;
    }
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetLabel(state.range(1) == 0 ? "direct" : state.range(1) == 1 ? "generic" : "quadratic");
}
BENCHMARK(BM_DiagonalRoutes)->ArgsProduct({{6, 10, 14}, {0, 1, 2}});

static void BM_TrotterStep(benchmark::State& state) {
  const unsigned n = qubits(state);
  const SpatialGrid grid(n, 10.0);
  EvolutionParams params;
  params.epsilon = 0.01;
  const TrotterStep step(Potential{Harmonic{1.0, 1.0}}, grid, params);
  auto s = prepare(Gaussian{1.0, 0.5, 1.0}, grid).state;
  for (auto _ : state) {
    step.apply(s);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.counters["gates"] = static_cast<double>(step.circuit().size());
}
BENCHMARK(BM_TrotterStep)->DenseRange(6, 14, 2);

BENCHMARK_MAIN();
