#pragma once

#include "qamp/plan.hpp"
#include "qamp/rng.hpp"
#include "qamp/walk.hpp"

namespace qamp {

struct PhaseSample {
  std::uint64_t raw_k = 0;   // measured phase register value
  double raw_phi = 0.0;      // raw_k / 2^t
  double folded_phi = 0.0;   // min(raw_phi, 1 - raw_phi)
};

enum class Verdict { Accept, Reject };

inline const char* verdict_name(Verdict v) { return v == Verdict::Accept ? "accept" : "reject"; }

struct Decision {
  Verdict verdict = Verdict::Reject;
  std::vector<PhaseSample> samples;
  double median_folded = 0.0;
  std::uint64_t queries_v = 0;
  std::uint64_t queries_v_dag = 0;
  PrecisionPlan plan;
};

// One phase estimation of the walk operator: t Hadamards, controlled walk
// powers realized as repeated controlled steps (2^t - 1 in total), inverse
// Fourier transform, measurement. The verifier register is collapsed in
// place and carried to the next round; the phase register is fresh.
PhaseSample phase_estimate_round(StateVector<>& verifier_state, const VerifierCircuit& circuit,
                                 int t_bits, RandomStream& rng, QueryCounter& counter);

// Full amplified verification: r phase-estimation rounds on the witness
// combined with fresh ancillae, folding each estimate, accepting when the
// median lands strictly below the midpoint of the two promise phases.
Decision fast_amplify(const VerifierCircuit& circuit, const StateVector<>& witness,
                      const PromiseParameters& params, RandomStream& rng,
                      double eps_pe = 1.0 / 16.0);

}  // namespace qamp
