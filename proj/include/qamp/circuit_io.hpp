#pragma once

#include <optional>
#include <string>

#include "qamp/jordan.hpp"
#include "qamp/verifier.hpp"

namespace qamp {

// Circuit documents are JSON:
//   {"num_witness_qubits": n, "num_ancilla_qubits": m, "output_qubit": o,
//    "gates": [{"name": "h", "targets": [0], "controls": [], "params": [],
//               "matrix": [[[re, im], ...], ...]}]}
// Witness files:
//   {"num_qubits": n, "amplitudes": [[re, im], ...]}   (length 2^n)

struct ParseOutcome {
  std::optional<VerifierCircuit> circuit;
  std::vector<std::string> errors;  // each names the offending field path
};

// Total parser: never throws on malformed input, reports every violation.
ParseOutcome try_parse_circuit(const std::string& text);

// Throwing variant: ValidationError carrying the first diagnostic.
VerifierCircuit parse_circuit(const std::string& text);

// Canonical JSON form; parse followed by serialize is idempotent.
std::string serialize_circuit(const VerifierCircuit& circuit);

struct WitnessFile {
  StateVector<> state;
  bool renormalized = false;  // input norm was off by more than 1e-6
  double norm_error = 0.0;
};

WitnessFile parse_witness(const std::string& text);
std::string serialize_witness(const StateVector<>& state);

std::string decomposition_to_json(const JordanDecomposition& decomp);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qamp
