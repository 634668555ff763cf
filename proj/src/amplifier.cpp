#include "qamp/amplifier.hpp"

#include <cmath>

#include "qamp/qft.hpp"

namespace qamp {

PhaseSample phase_estimate_round(StateVector<>& verifier_state, const VerifierCircuit& circuit,
                                 int t_bits, RandomStream& rng, QueryCounter& counter) {
  const int nv = verifier_state.num_qubits();
  if (nv < circuit.total_qubits())
    throw ValidationError("state does not cover the verifier register");
  if (t_bits < 1) throw ValidationError("phase register needs at least one qubit");
  if (nv + t_bits > kMaxStateQubits)
    throw GuardError("verifier plus phase register exceeds the " +
                     std::to_string(kMaxStateQubits) + "-qubit cap");

  auto state = append_zero_qubits(verifier_state, t_bits);
  std::vector<int> phase_wires(t_bits);
  for (int k = 0; k < t_bits; ++k) phase_wires[k] = nv + k;

  for (int wire : phase_wires) apply_gate(state, make_gate(GateKind::H, {wire}));
  for (int k = 0; k < t_bits; ++k)
    apply_walk(state, circuit, counter, phase_wires[k], std::uint64_t{1} << k);
  apply_inverse_qft(state, phase_wires);

  PhaseSample sample;
  sample.raw_k = measure_register(state, phase_wires, rng);
  sample.raw_phi = static_cast<double>(sample.raw_k) / static_cast<double>(dim_of(t_bits));
  sample.folded_phi = fold_phase(sample.raw_phi);

  verifier_state = extract_lower_qubits(state, nv, sample.raw_k);
  return sample;
}

Decision fast_amplify(const VerifierCircuit& circuit, const StateVector<>& witness,
                      const PromiseParameters& params, RandomStream& rng, double eps_pe) {
  if (witness.num_qubits() != circuit.num_witness_qubits)
    throw ValidationError("witness register size does not match the circuit");
  if (std::abs(witness.squared_norm() - 1.0) > 1e-6)
    throw ValidationError("witness state is not normalized");

  Decision decision;
  decision.plan = plan_precision(params, eps_pe);

  QueryCounter counter;
  auto verifier_state = append_zero_qubits(witness, circuit.num_ancilla_qubits);
  std::vector<double> folded;
  folded.reserve(params.rounds);
  for (int round = 0; round < params.rounds; ++round) {
    const auto sample =
        phase_estimate_round(verifier_state, circuit, decision.plan.t_bits, rng, counter);
    folded.push_back(sample.folded_phi);
    decision.samples.push_back(sample);
  }

  decision.median_folded = lower_median(std::move(folded));
  decision.verdict = decision.median_folded < decision.plan.accept_threshold()
                         ? Verdict::Accept
                         : Verdict::Reject;
  decision.queries_v = counter.v;
  decision.queries_v_dag = counter.v_dag;
  return decision;
}

}  // namespace qamp
