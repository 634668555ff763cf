#include "qamp/projectors.hpp"

#include <Eigen/Eigenvalues>

namespace qamp {

StateVector<> project_zero_ancillas(StateVector<> state, std::uint64_t ancilla_mask) {
  auto& a = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dimension(); ++i)
    if (i & ancilla_mask) a(static_cast<Eigen::Index>(i)) = Cplx(0, 0);
  return state;
}

StateVector<> project_zero_ancillas(StateVector<> state, const VerifierCircuit& circuit) {
  return project_zero_ancillas(std::move(state), circuit.ancilla_mask());
}

StateVector<> project_accepting(StateVector<> state, const VerifierCircuit& circuit) {
  apply_circuit(state, circuit.gates, Direction::Forward);
  const std::uint64_t out = circuit.output_mask();
  auto& a = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dimension(); ++i)
    if (!(i & out)) a(static_cast<Eigen::Index>(i)) = Cplx(0, 0);
  apply_circuit(state, circuit.gates, Direction::Inverse);
  return state;
}

OracleResult brute_force_pmax(const VerifierCircuit& circuit) {
  const int n = circuit.num_witness_qubits;
  const int total = circuit.total_qubits();
  if (total > kMaxDenseQubits)
    throw GuardError("brute_force_pmax limited to " + std::to_string(kMaxDenseQubits) +
                     " total qubits");

  // Acceptance operator on the zero-ancilla subspace, spanned by |x>|0...0>.
  const std::uint64_t dn = dim_of(n);
  CMatrix accept(dn, dn);
  for (std::uint64_t col = 0; col < dn; ++col) {
    auto s = StateVector<>::basis_state(total, col);
    s = project_accepting(std::move(s), circuit);
    for (std::uint64_t row = 0; row < dn; ++row)
      accept(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s.amp(row);
  }

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(accept);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition of the acceptance operator failed");

  const auto& values = solver.eigenvalues();
  Eigen::Index best = 0;
  values.maxCoeff(&best);
  double pmax = values(best);
  if (pmax < -1e-9 || pmax > 1.0 + 1e-9)
    throw std::runtime_error("acceptance eigenvalue outside [0,1] beyond tolerance");
  pmax = std::min(1.0, std::max(0.0, pmax));

  OracleResult result;
  result.pmax = pmax;
  result.top_witness = StateVector<>::from_amplitudes(n, solver.eigenvectors().col(best));
  return result;
}

double acceptance_probability(const VerifierCircuit& circuit, const StateVector<>& witness) {
  if (witness.num_qubits() != circuit.num_witness_qubits)
    throw ValidationError("witness register size does not match the circuit");
  auto state = append_zero_qubits(witness, circuit.num_ancilla_qubits);
  apply_circuit(state, circuit.gates, Direction::Forward);
  const std::uint64_t out = circuit.output_mask();
  double p = 0.0;
  for (std::uint64_t i = 0; i < state.dimension(); ++i)
    if (i & out) p += std::norm(state.amp(i));
  return p;
}

}  // namespace qamp
