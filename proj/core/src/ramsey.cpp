#include "qsim1d/ramsey.hpp"

#include <cmath>

#include "qsim1d/errors.hpp"

namespace qsim1d {

namespace {

void check_preparation(const Preparation& prep, unsigned n) {
  if (prep.amplitudes.size() != (std::size_t{1} << n)) {
    throw DomainError("preparation size does not match the register");
  }
}

// Loads `prep` into the subspace selected by `cond`, which must hold c |0...0>.
void load(StateVector& state, const Preparation& prep, unsigned n, Index branch, bool conj) {
  const std::size_t dim = std::size_t{1} << n;
  auto amps = state.amplitudes();
  const Complex c = amps[branch];
  double residual = 0.0;
  for (std::size_t k = 1; k < dim; ++k) residual += std::norm(amps[branch | k]);
  if (residual > 1e-24 * std::max(1.0, std::norm(c))) {
    throw DomainError("state preparation requires the register to be in |0...0>");
  }
  for (std::size_t k = 0; k < dim; ++k) {
    amps[branch | k] = c * (conj ? std::conj(prep.amplitudes[k]) : prep.amplitudes[k]);
  }
}

}  // namespace

void Program::append(const Circuit& circuit) {
  for (const auto& g : circuit) steps.emplace_back(g);
}

StateVector run(const Program& program) {
  StateVector state(program.n_qubits);
  for (const auto& step : program.steps) {
    std::visit(
        [&](const auto& s) {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, GateOp>) {
            qsim1d::apply(state, s);
          } else if constexpr (std::is_same_v<S, Preparation>) {
            check_preparation(s, program.n_qubits);
            load(state, s, program.n_qubits, 0, false);
          } else {
            s.action(state);
          }
        },
        step);
  }
  return state;
}

Program conjugate(const Program& program) {
  Program out{program.n_qubits, {}};
  out.steps.reserve(program.steps.size());
  for (const auto& step : program.steps) {
    out.steps.push_back(std::visit(
        [](const auto& s) -> ProgramStep {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, GateOp>) {
            return conjugate(s);
          } else if constexpr (std::is_same_v<S, Preparation>) {
            Preparation c{s.amplitudes};
            for (auto& a : c.amplitudes) a = std::conj(a);
            return c;
          } else {
            throw ConstructionError("operator '" + s.name + "' has no defined conjugate");
          }
        },
        step));
  }
  return out;
}

RamseyInterferometer::RamseyInterferometer(unsigned n_system_qubits)
    : n_(n_system_qubits), state_(n_system_qubits + 1) {
  apply_hadamard(state_, n_);
}

void RamseyInterferometer::apply_branch(const ProgramStep& step, bool conjugated) {
  const Index ancilla = Index{1} << n_;
  const Condition cond{ancilla, conjugated ? ancilla : 0};
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, GateOp>) {
          validate(s, n_);
          qsim1d::apply(state_, conjugated ? conjugate(s) : s, cond);
        } else if constexpr (std::is_same_v<S, Preparation>) {
          check_preparation(s, n_);
          load(state_, s, n_, cond.value, conjugated);
        } else {
          throw ConstructionError("operator '" + s.name + "' has no defined conjugate");
        }
      },
      step);
}

void RamseyInterferometer::append(const ProgramStep& step) {
  if (std::holds_alternative<OpaqueOperator>(step)) {
    throw ConstructionError("operator '" + std::get<OpaqueOperator>(step).name +
                            "' has no defined conjugate");
  }
  apply_branch(step, false);
  apply_branch(step, true);
}

void RamseyInterferometer::append(const Circuit& circuit) {
  for (const auto& g : circuit) append(ProgramStep{g});
}

void RamseyInterferometer::append(const Program& program) {
  if (program.n_qubits != n_) throw DomainError("program size does not match the interferometer");
  // Reject the whole program before touching the state.
  (void)conjugate(program);
  for (const auto& step : program.steps) append(step);
}

StateVector RamseyInterferometer::output() const {
  StateVector phi = state_;
  apply_hadamard(phi, n_);
  return phi;
}

RamseyOutcome RamseyInterferometer::outcome() const { return ramsey_probabilities(output()); }

StateVector ramsey_state(const Program& w) {
  RamseyInterferometer interferometer(w.n_qubits);
  interferometer.append(w);
  return interferometer.output();
}

RamseyOutcome ramsey_probabilities(const StateVector& phi) {
  if (phi.num_qubits() < 2) throw DomainError("Ramsey register needs an ancilla and a system qubit");
  const std::size_t dim = phi.size() / 2;
  RamseyOutcome out;
  out.p0.resize(dim);
  out.p1.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    out.p0[k] = std::norm(phi[k]);
    out.p1[k] = std::norm(phi[dim + k]);
    out.ancilla_p0 += out.p0[k];
    out.ancilla_p1 += out.p1[k];
  }
  return out;
}

}  // namespace qsim1d
