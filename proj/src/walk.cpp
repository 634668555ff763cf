#include "qamp/walk.hpp"

namespace qamp {

namespace {

void check_control(const VerifierCircuit& circuit, const StateVector<>& state,
                   std::optional<int> control) {
  if (!control) return;
  if (*control < circuit.total_qubits() || *control >= state.num_qubits())
    throw ValidationError("reflection control wire must lie outside the verifier register");
}

// Multiplies by -1 every basis state selected by `flip` (when the control
// bit, if any, is set).
template <typename FlipFn>
void sign_flip(StateVector<>& state, std::optional<int> control, FlipFn&& flip) {
  const std::uint64_t cmask = control ? (std::uint64_t{1} << *control) : 0;
  auto& a = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    if ((i & cmask) != cmask) continue;
    if (flip(i)) a(static_cast<Eigen::Index>(i)) = -a(static_cast<Eigen::Index>(i));
  }
}

}  // namespace

void apply_reflection(StateVector<>& state, Reflection which, const VerifierCircuit& circuit,
                      QueryCounter& counter, std::optional<int> control) {
  check_control(circuit, state, control);
  if (which == Reflection::ZeroAncillas) {
    const std::uint64_t anc = circuit.ancilla_mask();
    sign_flip(state, control, [anc](std::uint64_t i) { return (i & anc) != 0; });
    return;
  }
  // Conjugation makes the circuit evaluations unconditional; only the inner
  // output-wire reflection needs the control.
  apply_circuit(state, circuit.gates, Direction::Forward);
  ++counter.v;
  const std::uint64_t out = circuit.output_mask();
  sign_flip(state, control, [out](std::uint64_t i) { return (i & out) == 0; });
  apply_circuit(state, circuit.gates, Direction::Inverse);
  ++counter.v_dag;
}

void apply_walk(StateVector<>& state, const VerifierCircuit& circuit, QueryCounter& counter,
                std::optional<int> control, std::uint64_t repetitions, bool adjoint) {
  for (std::uint64_t k = 0; k < repetitions; ++k) {
    if (adjoint) {
      apply_reflection(state, Reflection::Accepting, circuit, counter, control);
      apply_reflection(state, Reflection::ZeroAncillas, circuit, counter, control);
    } else {
      apply_reflection(state, Reflection::ZeroAncillas, circuit, counter, control);
      apply_reflection(state, Reflection::Accepting, circuit, counter, control);
    }
  }
}

}  // namespace qamp
