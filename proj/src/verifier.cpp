#include "qamp/verifier.hpp"

namespace qamp {

void PromiseParameters::check() const {
  if (!(a > 0.0 && a <= 1.0)) throw ValidationError("promise bound a must lie in (0, 1]");
  if (!(b >= 0.0 && b < 1.0)) throw ValidationError("promise bound b must lie in [0, 1)");
  if (!(b < a)) throw ValidationError("promise bounds require b < a");
  if (a - b < 1e-6) throw ValidationError("promise gap a - b below the 1e-6 guard");
  if (rounds < 1) throw ValidationError("round count must be >= 1");
}

ValidationReport validate(const VerifierCircuit& circuit) {
  ValidationReport report;
  auto err = [&](std::string msg) { report.errors.push_back(std::move(msg)); };

  if (circuit.num_witness_qubits < 1) err("num_witness_qubits must be >= 1");
  if (circuit.num_ancilla_qubits < 1) err("num_ancilla_qubits must be >= 1");
  const int total = circuit.total_qubits();
  if (total > kMaxStateQubits)
    err("circuit uses " + std::to_string(total) + " qubits, above the cap of " +
        std::to_string(kMaxStateQubits));

  if (circuit.output_qubit < 0 || circuit.output_qubit >= total) {
    err("output_qubit " + std::to_string(circuit.output_qubit) + " is not a wire index");
  } else if (circuit.output_qubit < circuit.num_witness_qubits) {
    report.warnings.push_back("output_qubit " + std::to_string(circuit.output_qubit) +
                              " is a witness wire; by convention it is an ancilla wire");
  }

  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const auto& g = circuit.gates[i];
    try {
      detail::check_wires(g, total);
      if (g.kind == GateKind::Unitary) {
        if (!((g.matrix.rows() == 2 && g.matrix.cols() == 2) ||
              (g.matrix.rows() == 4 && g.matrix.cols() == 4)))
          throw ValidationError("explicit gate matrix must be 2x2 or 4x4");
        if (unitarity_defect<double>(g.matrix) > 1e-12)
          throw ValidationError("explicit gate matrix is not unitary within 1e-12");
      }
    } catch (const ValidationError& e) {
      err("gates[" + std::to_string(i) + "] (" + gate_kind_name(g.kind) + "): " + e.what());
    }
  }
  return report;
}

}  // namespace qamp
