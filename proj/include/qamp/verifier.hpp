#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qamp/circuit.hpp"

namespace qamp {

// Verifier circuit over witness wires [0, n) and ancilla wires [n, n+m).
// Acceptance means measuring 1 on the output wire after running the gates.
struct VerifierCircuit {
  int num_witness_qubits = 1;
  int num_ancilla_qubits = 1;
  int output_qubit = 1;
  std::vector<Gate<>> gates;

  int total_qubits() const { return num_witness_qubits + num_ancilla_qubits; }

  std::uint64_t ancilla_mask() const {
    return (dim_of(num_ancilla_qubits) - 1) << num_witness_qubits;
  }

  std::uint64_t output_mask() const { return std::uint64_t{1} << output_qubit; }
};

struct PromiseParameters {
  double a = 0.9;  // some witness accepted with probability >= a in yes cases
  double b = 0.5;  // every state accepted with probability <= b in no cases
  int rounds = 6;  // r: independent repetitions backing the 2^-r confidence

  void check() const;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

// Collects every invariant violation instead of stopping at the first one.
// An error-free report means the circuit is usable by the rest of the
// library; warnings flag unusual but permitted layouts.
ValidationReport validate(const VerifierCircuit& circuit);

}  // namespace qamp
