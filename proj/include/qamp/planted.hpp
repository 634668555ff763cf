#pragma once

#include "qamp/verifier.hpp"

namespace qamp {

// Test fixture: a verifier circuit together with its analytically known
// acceptance spectrum.
struct PlantedInstance {
  VerifierCircuit circuit;
  double known_pmax = 0.0;
  StateVector<> top_witness;
  bool is_yes_instance = true;
};

// Verifier accepting a designated witness basis state with probability
// exactly `p_target` and everything orthogonal to it with probability 0:
// the output ancilla is flipped and rotated, conditioned on the designated
// state. The decomposition has exactly one invariant plane.
PlantedInstance make_rotation_instance(int num_witness, int num_ancilla, double p_target,
                                       std::uint64_t seed);

// Rotation instance whose principal angle is exactly numerator / 2^t_bits,
// so phase estimation with t_bits (or more) resolves it without error.
// Requires 0 < numerator / 2^t_bits < 1/2.
PlantedInstance make_dyadic_phase_instance(int num_witness, int num_ancilla,
                                           std::uint64_t numerator, int t_bits,
                                           std::uint64_t seed);

// Certified no instance: pmax = b - margin.
PlantedInstance make_no_instance(int num_witness, int num_ancilla, double b, double margin,
                                 std::uint64_t seed);

// Both projectors commute: the decomposition contains only invariant lines
// and some witness is accepted with probability exactly 1.
PlantedInstance make_commuting_instance(int num_witness, int num_ancilla, std::uint64_t seed);

// Unstructured random circuit; pmax and the top witness come from the
// spectral oracle (n + m <= 10).
PlantedInstance make_uniform_random_instance(int num_witness, int num_ancilla, int gate_count,
                                             std::uint64_t seed);

VerifierCircuit make_random_circuit(int num_witness, int num_ancilla, int gate_count,
                                    std::uint64_t seed);

}  // namespace qamp
