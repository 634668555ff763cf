#pragma once

#include "qamp/verifier.hpp"

namespace qamp {

// Projection onto basis states whose ancilla wires all read 0. Works on
// states that carry extra wires above the verifier register.
StateVector<> project_zero_ancillas(StateVector<> state, const VerifierCircuit& circuit);
StateVector<> project_zero_ancillas(StateVector<> state, std::uint64_t ancilla_mask);

// Projection onto the verifier's accepting subspace: run the circuit, keep
// the output-wire-reads-1 component, run the circuit backwards.
StateVector<> project_accepting(StateVector<> state, const VerifierCircuit& circuit);

struct OracleResult {
  double pmax = 0.0;              // largest acceptance probability over witnesses
  StateVector<> top_witness;      // attaining witness on the n witness wires
};

// Spectral oracle: diagonalizes the acceptance operator restricted to the
// zero-ancilla subspace. Exact at desk scale; n + m <= 10.
OracleResult brute_force_pmax(const VerifierCircuit& circuit);

// Acceptance probability of one witness: <witness 0|P_accept|witness 0>.
double acceptance_probability(const VerifierCircuit& circuit, const StateVector<>& witness);

}  // namespace qamp
