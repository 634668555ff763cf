#pragma once

#include <optional>
#include <string>

#include "qamp/amplifier.hpp"

namespace qamp {

// t-qubit state with amplitudes 2^{-t/2} exp(2 pi i k phi) for a dyadic
// phase phi = numerator / 2^t; the inverse Fourier transform maps it to the
// basis state |numerator>.
struct FilterState {
  int t_bits = 0;
  std::uint64_t numerator = 0;
  StateVector<> state;

  double phi() const { return static_cast<double>(numerator) / static_cast<double>(dim_of(t_bits)); }
};

FilterState make_filter_state(std::uint64_t numerator, int t_bits);

// Runs the phase-estimation circuit backwards on alpha combined with the
// filter state for the target phase. Eigencomponents of the walk whose
// eigenphase matches the filter exactly end up with the phase register at
// zero; everything else leaks into nonzero register states.
StateVector<> reverse_phase_estimation(const VerifierCircuit& circuit, const StateVector<>& alpha,
                                       std::uint64_t numerator, int t_bits,
                                       QueryCounter& counter);

struct AmplifySchedule {
  int max_iterations = 64;
  double success_threshold = 0.8;
};

struct AmplifyResult {
  bool ok = false;                        // reached the success threshold
  int iterations = 0;                     // Grover iterations applied
  double zero_register_probability = 0.0; // of the returned state
  StateVector<> state;
};

// Amplitude amplification toward the zero phase register, growing the
// iteration count until the measured success probability clears the
// schedule's threshold. The initial overlap is unknown in advance, so the
// iteration count cannot be fixed a priori; exhaustion is reported rather
// than fatal and callers retry with a fresh input state.
AmplifyResult amplify_zero_register(const StateVector<>& initial, int t_bits,
                                    const AmplifySchedule& schedule = {});

struct WitnessCandidate {
  StateVector<> witness;
  double estimated_acceptance = 0.0;  // cos^2(pi * median folded phase) of the verifying run
  double grid_phi = 0.0;
  std::optional<double> fidelity_vs_oracle;  // filled by tests only
};

struct PrepareEvent {
  std::uint64_t grid_numerator = 0;
  int attempt = 0;
  std::string stage;  // amplify_exhausted | phase_miss | ancilla_miss | verify_reject | accepted
};

struct PrepareOutcome {
  std::optional<WitnessCandidate> candidate;
  std::vector<PrepareEvent> events;
  std::uint64_t queries_v = 0;
  std::uint64_t queries_v_dag = 0;
};

// Scans dyadic grid phases upward from zero (small phase = high acceptance),
// extracting a candidate witness per attempt: reverse phase estimation on a
// random state, zero-register amplification, phase-register postselection,
// then ancilla postselection (probability ~1/2). Candidates must pass the
// amplified verification before being returned.
PrepareOutcome prepare_witness(const VerifierCircuit& circuit, const PromiseParameters& params,
                               int t_bits, int max_retries, RandomStream& rng);

struct ExactPhaseResult {
  Verdict verdict = Verdict::Reject;
  bool passed_probability_gate = false;
  std::vector<PhaseSample> samples;
};

// One-sided verification for a claimed exact t-bit phase: reject unless
// cos^2(pi * claim) clears the promise bound a, then demand that every one
// of the r phase estimates reads the claimed value or its negative. On a
// planted instance with an exact dyadic phase and the true witness this
// never rejects.
ExactPhaseResult qma1_verify(const VerifierCircuit& circuit, const StateVector<>& witness,
                             std::uint64_t claimed_numerator, int t_bits,
                             const PromiseParameters& params, RandomStream& rng);

}  // namespace qamp
