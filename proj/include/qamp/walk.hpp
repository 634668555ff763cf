#pragma once

#include <optional>

#include "qamp/verifier.hpp"

namespace qamp {

// Verifier-circuit usage, split into forward and conjugate evaluations.
struct QueryCounter {
  std::uint64_t v = 0;
  std::uint64_t v_dag = 0;
};

enum class Reflection {
  ZeroAncillas,  // +1 on all-zero ancillae, -1 elsewhere
  Accepting,     // conjugate by the verifier around the output-wire reflection
};

// Applies the involutive reflection in place, optionally conditioned on a
// control wire outside the verifier register. The accepting reflection
// always costs one forward and one conjugate circuit evaluation; its central
// sign flip (-1 on output 0) becomes a relative phase under the control.
void apply_reflection(StateVector<>& state, Reflection which, const VerifierCircuit& circuit,
                      QueryCounter& counter, std::optional<int> control = std::nullopt);

// (accepting reflection) * (zero-ancilla reflection), `repetitions` times;
// the adjoint applies the reflections in swapped order. Each repetition
// advances both query counters by one.
void apply_walk(StateVector<>& state, const VerifierCircuit& circuit, QueryCounter& counter,
                std::optional<int> control = std::nullopt, std::uint64_t repetitions = 1,
                bool adjoint = false);

}  // namespace qamp
