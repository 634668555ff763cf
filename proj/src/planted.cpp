#include "qamp/planted.hpp"

#include <cmath>

#include "qamp/projectors.hpp"
#include "qamp/rng.hpp"

namespace qamp {

namespace {

// Output ancilla flipped then rotated by `theta` about y, conditioned on the
// witness register reading the designated basis state. The designated branch
// is accepted with probability cos^2(theta / 2); every other branch keeps
// its ancillae untouched and is never accepted.
PlantedInstance rotation_instance_with_angle(int num_witness, int num_ancilla, double theta,
                                             double known_pmax, std::uint64_t seed) {
  if (num_witness < 1 || num_ancilla < 1)
    throw ValidationError("planted instances need at least one witness and one ancilla wire");

  RandomStream rng(seed);
  const std::uint64_t designated = rng.uniform_int(dim_of(num_witness));
  const int output = num_witness;  // first ancilla wire

  VerifierCircuit circuit;
  circuit.num_witness_qubits = num_witness;
  circuit.num_ancilla_qubits = num_ancilla;
  circuit.output_qubit = output;

  std::vector<int> witness_wires(num_witness);
  for (int i = 0; i < num_witness; ++i) witness_wires[i] = i;

  auto flip_zero_bits = [&] {
    for (int i = 0; i < num_witness; ++i)
      if (!((designated >> i) & 1u)) circuit.gates.push_back(make_gate(GateKind::X, {i}));
  };

  flip_zero_bits();
  circuit.gates.push_back(make_gate(GateKind::X, {output}, witness_wires));
  circuit.gates.push_back(make_gate(GateKind::RotY, {output}, witness_wires, theta));
  flip_zero_bits();

  PlantedInstance instance;
  instance.circuit = std::move(circuit);
  instance.known_pmax = known_pmax;
  instance.top_witness = StateVector<>::basis_state(num_witness, designated);
  return instance;
}

}  // namespace

PlantedInstance make_rotation_instance(int num_witness, int num_ancilla, double p_target,
                                       std::uint64_t seed) {
  if (!(p_target > 0.0 && p_target < 1.0))
    throw ValidationError("rotation instance needs p_target strictly inside (0, 1)");
  const double theta = 2.0 * std::acos(std::sqrt(p_target));
  auto instance = rotation_instance_with_angle(num_witness, num_ancilla, theta, p_target, seed);
  instance.is_yes_instance = true;
  return instance;
}

PlantedInstance make_dyadic_phase_instance(int num_witness, int num_ancilla,
                                           std::uint64_t numerator, int t_bits,
                                           std::uint64_t seed) {
  if (t_bits < 1 || t_bits > 30) throw ValidationError("t_bits outside [1, 30]");
  const double phi = static_cast<double>(numerator) / static_cast<double>(dim_of(t_bits));
  if (!(phi > 0.0 && phi < 0.5))
    throw ValidationError("dyadic phase must satisfy 0 < numerator/2^t < 1/2");
  const double c = std::cos(pi() * phi);
  auto instance = rotation_instance_with_angle(num_witness, num_ancilla, 2.0 * pi() * phi,
                                               c * c, seed);
  instance.is_yes_instance = true;
  return instance;
}

PlantedInstance make_no_instance(int num_witness, int num_ancilla, double b, double margin,
                                 std::uint64_t seed) {
  const double p = b - margin;
  if (!(p > 0.0)) throw ValidationError("no-instance target b - margin must be positive");
  auto instance = make_rotation_instance(num_witness, num_ancilla, p, seed);
  instance.is_yes_instance = false;
  return instance;
}

PlantedInstance make_commuting_instance(int num_witness, int num_ancilla, std::uint64_t seed) {
  if (num_witness < 1 || num_ancilla < 1)
    throw ValidationError("planted instances need at least one witness and one ancilla wire");
  RandomStream rng(seed);
  const int output = num_witness;

  VerifierCircuit circuit;
  circuit.num_witness_qubits = num_witness;
  circuit.num_ancilla_qubits = num_ancilla;
  circuit.output_qubit = output;

  std::vector<int> parity_wires;
  for (int i = 0; i < num_witness; ++i)
    if (rng.uniform() < 0.5) parity_wires.push_back(i);
  bool flip = rng.uniform() < 0.5;
  if (parity_wires.empty() && !flip) flip = true;

  // Diagonal texture on the witness register; acceptance is phase-blind.
  for (int i = 0; i < num_witness; ++i)
    if (rng.uniform() < 0.5)
      circuit.gates.push_back(make_gate(GateKind::Phase, {i}, {}, 2.0 * pi() * rng.uniform()));

  if (flip) circuit.gates.push_back(make_gate(GateKind::X, {output}));
  for (int w : parity_wires) circuit.gates.push_back(make_gate(GateKind::CX, {w, output}));

  std::uint64_t witness_index = 0;
  if (!flip) witness_index = std::uint64_t{1} << parity_wires.front();

  PlantedInstance instance;
  instance.circuit = std::move(circuit);
  instance.known_pmax = 1.0;
  instance.top_witness = StateVector<>::basis_state(num_witness, witness_index);
  instance.is_yes_instance = true;
  return instance;
}

VerifierCircuit make_random_circuit(int num_witness, int num_ancilla, int gate_count,
                                    std::uint64_t seed) {
  RandomStream rng(seed);
  const int total = num_witness + num_ancilla;

  VerifierCircuit circuit;
  circuit.num_witness_qubits = num_witness;
  circuit.num_ancilla_qubits = num_ancilla;
  circuit.output_qubit = num_witness;

  static constexpr GateKind kSingle[] = {GateKind::H,    GateKind::X,    GateKind::Y,
                                         GateKind::Z,    GateKind::S,    GateKind::T,
                                         GateKind::Phase, GateKind::RotX, GateKind::RotY,
                                         GateKind::RotZ};
  static constexpr GateKind kDouble[] = {GateKind::CX, GateKind::CZ, GateKind::Swap};

  auto pick_wire = [&] { return static_cast<int>(rng.uniform_int(total)); };
  for (int i = 0; i < gate_count; ++i) {
    const double kind_draw = rng.uniform();
    if (kind_draw < 0.6 || total < 2) {
      const auto kind = kSingle[rng.uniform_int(std::size(kSingle))];
      circuit.gates.push_back(make_gate(kind, {pick_wire()}, {}, 2.0 * pi() * rng.uniform()));
    } else {
      int a = pick_wire(), b = pick_wire();
      while (b == a) b = pick_wire();
      if (kind_draw < 0.9) {
        circuit.gates.push_back(make_gate(kDouble[rng.uniform_int(std::size(kDouble))], {a, b}));
      } else {
        const auto kind = kSingle[rng.uniform_int(std::size(kSingle))];
        circuit.gates.push_back(make_gate(kind, {a}, {b}, 2.0 * pi() * rng.uniform()));
      }
    }
  }
  return circuit;
}

PlantedInstance make_uniform_random_instance(int num_witness, int num_ancilla, int gate_count,
                                             std::uint64_t seed) {
  PlantedInstance instance;
  instance.circuit = make_random_circuit(num_witness, num_ancilla, gate_count, seed);
  auto oracle = brute_force_pmax(instance.circuit);
  instance.known_pmax = oracle.pmax;
  instance.top_witness = std::move(oracle.top_witness);
  instance.is_yes_instance = oracle.pmax >= 0.5;
  return instance;
}

}  // namespace qamp
