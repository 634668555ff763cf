#pragma once

#include "qamp/amplifier.hpp"

namespace qamp {

// Outcome record of the alternating-measurement baseline. Bit 0 marks the
// in-support outcome of whichever binary measurement was performed, so a
// perfectly accepted witness yields an all-zero trace. Consecutive bits
// (with a 0 prepended) differ independently with probability 1 - p inside an
// invariant plane of acceptance p.
struct MeasurementTrace {
  std::vector<std::uint8_t> bits;
  int transitions = 0;
  std::uint64_t queries_v = 0;
  std::uint64_t queries_v_dag = 0;
  StateVector<> final_state;  // stays inside the initial invariant plane
};

int transition_count(const std::vector<std::uint8_t>& bits);

// N alternating binary measurements of the accepting and zero-ancilla
// projectors. Which projector goes first is not fixed by the procedure's
// statistics; the default starts with the accepting one. Only accepting
// measurements evaluate the circuit (once forward, once backward each).
MeasurementTrace alternating_measurements(const VerifierCircuit& circuit,
                                          const StateVector<>& witness, int num_measurements,
                                          RandomStream& rng, bool start_with_accepting = true);

// Accept when the transition count stays strictly below N (a + b) / 2.
Verdict decide_from_trace(const MeasurementTrace& trace, const PromiseParameters& params);

double decision_threshold(int num_measurements, const PromiseParameters& params);

// Likelihood (1-p)^z * p^(N-z) of a trace with z transitions.
double sequence_probability(double p, int num_measurements, int transitions);

}  // namespace qamp
