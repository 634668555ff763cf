#include "qamp/alternating.hpp"

#include <cmath>

namespace qamp {

int transition_count(const std::vector<std::uint8_t>& bits) {
  int count = 0;
  std::uint8_t prev = 0;  // virtual leading zero
  for (std::uint8_t bit : bits) {
    if (bit != prev) ++count;
    prev = bit;
  }
  return count;
}

MeasurementTrace alternating_measurements(const VerifierCircuit& circuit,
                                          const StateVector<>& witness, int num_measurements,
                                          RandomStream& rng, bool start_with_accepting) {
  if (num_measurements < 1) throw ValidationError("need at least one measurement");
  if (witness.num_qubits() != circuit.num_witness_qubits)
    throw ValidationError("witness register size does not match the circuit");

  MeasurementTrace trace;
  trace.bits.reserve(num_measurements);
  QueryCounter counter;

  auto state = append_zero_qubits(witness, circuit.num_ancilla_qubits);
  const std::uint64_t anc = circuit.ancilla_mask();
  const std::uint64_t out = circuit.output_mask();

  for (int k = 0; k < num_measurements; ++k) {
    bool in_support;
    if ((k % 2 == 0) == start_with_accepting) {
      apply_circuit(state, circuit.gates, Direction::Forward);
      ++counter.v;
      in_support = measure_binary(state, [out](std::uint64_t i) { return (i & out) != 0; }, rng);
      apply_circuit(state, circuit.gates, Direction::Inverse);
      ++counter.v_dag;
    } else {
      in_support = measure_binary(state, [anc](std::uint64_t i) { return (i & anc) == 0; }, rng);
    }
    trace.bits.push_back(in_support ? 0 : 1);
  }

  trace.transitions = transition_count(trace.bits);
  trace.queries_v = counter.v;
  trace.queries_v_dag = counter.v_dag;
  trace.final_state = std::move(state);
  return trace;
}

double decision_threshold(int num_measurements, const PromiseParameters& params) {
  return num_measurements * (params.a + params.b) / 2.0;
}

Verdict decide_from_trace(const MeasurementTrace& trace, const PromiseParameters& params) {
  params.check();
  const double threshold = decision_threshold(static_cast<int>(trace.bits.size()), params);
  return trace.transitions < threshold ? Verdict::Accept : Verdict::Reject;
}

double sequence_probability(double p, int num_measurements, int transitions) {
  if (transitions < 0 || transitions > num_measurements)
    throw ValidationError("transition count outside [0, N]");
  if (p < 0.0 || p > 1.0) throw ValidationError("probability outside [0, 1]");
  return std::pow(1.0 - p, transitions) * std::pow(p, num_measurements - transitions);
}

}  // namespace qamp
