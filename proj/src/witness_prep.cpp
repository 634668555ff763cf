#include "qamp/witness_prep.hpp"

#include <cmath>

#include "qamp/projectors.hpp"
#include "qamp/qft.hpp"

namespace qamp {

FilterState make_filter_state(std::uint64_t numerator, int t_bits) {
  if (t_bits < 1 || t_bits > kMaxStateQubits) throw ValidationError("filter register size out of range");
  const std::uint64_t dim = dim_of(t_bits);
  if (numerator >= dim) throw ValidationError("filter numerator must lie in [0, 2^t)");

  FilterState filter;
  filter.t_bits = t_bits;
  filter.numerator = numerator;
  filter.state = StateVector<>(t_bits);
  auto& a = filter.state.amplitudes();
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  const double phi = filter.phi();
  for (std::uint64_t k = 0; k < dim; ++k)
    a(static_cast<Eigen::Index>(k)) = std::polar(scale, 2.0 * pi() * phi * static_cast<double>(k));
  return filter;
}

StateVector<> reverse_phase_estimation(const VerifierCircuit& circuit, const StateVector<>& alpha,
                                       std::uint64_t numerator, int t_bits,
                                       QueryCounter& counter) {
  const int nv = alpha.num_qubits();
  if (nv < circuit.total_qubits())
    throw ValidationError("state does not cover the verifier register");
  if (t_bits < 1 || nv + t_bits > kMaxStateQubits)
    throw GuardError("verifier plus filter register exceeds the " +
                     std::to_string(kMaxStateQubits) + "-qubit cap");

  const auto filter = make_filter_state(numerator, t_bits);
  auto state = tensor_high(alpha, filter.state);

  // Inverse of [Hadamards, controlled walk powers]: adjoint powers in
  // reverse order, then the Hadamards.
  for (int k = t_bits - 1; k >= 0; --k)
    apply_walk(state, circuit, counter, nv + k, std::uint64_t{1} << k, /*adjoint=*/true);
  for (int k = 0; k < t_bits; ++k) apply_gate(state, make_gate(GateKind::H, {nv + k}));
  return state;
}

namespace {

double zero_register_probability(const StateVector<>& state, int t_bits) {
  const std::uint64_t low_dim = dim_of(state.num_qubits() - t_bits);
  double p = 0.0;
  for (std::uint64_t i = 0; i < low_dim; ++i) p += std::norm(state.amp(i));
  return p;
}

}  // namespace

AmplifyResult amplify_zero_register(const StateVector<>& initial, int t_bits,
                                    const AmplifySchedule& schedule) {
  const int total = initial.num_qubits();
  if (t_bits < 1 || t_bits >= total) throw ValidationError("phase register size out of range");
  const std::uint64_t low_dim = dim_of(total - t_bits);

  AmplifyResult result;
  result.state = initial;
  result.zero_register_probability = zero_register_probability(initial, t_bits);
  if (result.zero_register_probability >= schedule.success_threshold) {
    result.ok = true;
    return result;
  }
  if (result.zero_register_probability < 1e-14) return result;  // nothing to amplify

  AmplifyResult best = result;
  auto current = initial;
  for (int k = 1; k <= schedule.max_iterations; ++k) {
    // Reflection about the zero phase register.
    auto& a = current.amplitudes();
    for (std::uint64_t i = 0; i < low_dim; ++i)
      a(static_cast<Eigen::Index>(i)) = -a(static_cast<Eigen::Index>(i));
    // Reflection about the initial state: x -> 2 <initial|x> initial - x.
    const Cplx overlap = initial.amplitudes().dot(current.amplitudes());
    current.amplitudes() = (2.0 * overlap) * initial.amplitudes() - current.amplitudes();

    const double p = zero_register_probability(current, t_bits);
    if (p > best.zero_register_probability) {
      best.state = current;
      best.zero_register_probability = p;
      best.iterations = k;
    }
    if (p >= schedule.success_threshold) break;
  }

  best.ok = best.zero_register_probability >= schedule.success_threshold;
  return best;
}

PrepareOutcome prepare_witness(const VerifierCircuit& circuit, const PromiseParameters& params,
                               int t_bits, int max_retries, RandomStream& rng) {
  params.check();
  if (max_retries < 1) throw ValidationError("max_retries must be >= 1");
  const int total = circuit.total_qubits();
  const int n = circuit.num_witness_qubits;

  PrepareOutcome outcome;
  QueryCounter counter;
  std::vector<int> phase_wires(t_bits);
  for (int k = 0; k < t_bits; ++k) phase_wires[k] = total + k;
  std::vector<int> ancilla_wires(circuit.num_ancilla_qubits);
  for (int k = 0; k < circuit.num_ancilla_qubits; ++k) ancilla_wires[k] = n + k;

  for (std::uint64_t numerator = 0; numerator <= dim_of(t_bits - 1); ++numerator) {
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
      auto record = [&](const char* stage) {
        outcome.events.push_back({numerator, attempt, stage});
      };

      const auto alpha = random_state(total, rng);
      auto extracted = reverse_phase_estimation(circuit, alpha, numerator, t_bits, counter);
      auto amplified = amplify_zero_register(std::move(extracted), t_bits);
      if (!amplified.ok) {
        record("amplify_exhausted");
        continue;
      }

      auto state = std::move(amplified.state);
      if (measure_register(state, phase_wires, rng) != 0) {
        record("phase_miss");
        continue;
      }
      auto verifier_state = extract_lower_qubits(state, total, 0);
      if (measure_register(verifier_state, ancilla_wires, rng) != 0) {
        record("ancilla_miss");
        continue;
      }
      auto witness = extract_lower_qubits(verifier_state, n, 0);
      witness.renormalize();

      const auto decision = fast_amplify(circuit, witness, params, rng);
      if (decision.verdict != Verdict::Accept) {
        record("verify_reject");
        continue;
      }
      record("accepted");

      WitnessCandidate candidate;
      candidate.witness = std::move(witness);
      const double med = decision.median_folded;
      candidate.estimated_acceptance = std::cos(pi() * med) * std::cos(pi() * med);
      candidate.grid_phi = static_cast<double>(numerator) / static_cast<double>(dim_of(t_bits));
      outcome.candidate = std::move(candidate);
      outcome.queries_v = counter.v + decision.queries_v;
      outcome.queries_v_dag = counter.v_dag + decision.queries_v_dag;
      return outcome;
    }
  }
  outcome.queries_v = counter.v;
  outcome.queries_v_dag = counter.v_dag;
  return outcome;
}

ExactPhaseResult qma1_verify(const VerifierCircuit& circuit, const StateVector<>& witness,
                             std::uint64_t claimed_numerator, int t_bits,
                             const PromiseParameters& params, RandomStream& rng) {
  params.check();
  if (t_bits < 1) throw ValidationError("phase register needs at least one qubit");
  if (claimed_numerator > dim_of(t_bits - 1))
    throw ValidationError("claimed phase must lie in [0, 1/2], i.e. numerator <= 2^(t-1)");
  if (witness.num_qubits() != circuit.num_witness_qubits)
    throw ValidationError("witness register size does not match the circuit");

  ExactPhaseResult result;
  const double claimed_phi =
      static_cast<double>(claimed_numerator) / static_cast<double>(dim_of(t_bits));
  const double p_claim = std::cos(pi() * claimed_phi) * std::cos(pi() * claimed_phi);
  result.passed_probability_gate = p_claim >= params.a;
  if (!result.passed_probability_gate) return result;

  const std::uint64_t mirror = (dim_of(t_bits) - claimed_numerator) % dim_of(t_bits);
  QueryCounter counter;
  auto verifier_state = append_zero_qubits(witness, circuit.num_ancilla_qubits);
  bool all_match = true;
  for (int round = 0; round < params.rounds; ++round) {
    const auto sample = phase_estimate_round(verifier_state, circuit, t_bits, rng, counter);
    result.samples.push_back(sample);
    if (sample.raw_k != claimed_numerator && sample.raw_k != mirror) all_match = false;
  }
  result.verdict = all_match ? Verdict::Accept : Verdict::Reject;
  return result;
}

}  // namespace qamp
