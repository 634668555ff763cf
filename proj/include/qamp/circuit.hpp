#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qamp/gates.hpp"
#include "qamp/rng.hpp"
#include "qamp/statevector.hpp"
#include "qamp/types.hpp"

namespace qamp {

namespace detail {

template <typename Scalar>
void check_wires(const Gate<Scalar>& g, int num_qubits) {
  std::uint64_t seen = 0;
  const int expected_targets = g.arity();
  if (static_cast<int>(g.targets.size()) != expected_targets)
    throw ValidationError("gate '" + std::string(gate_kind_name(g.kind)) + "' expects " +
                          std::to_string(expected_targets) + " target(s)");
  auto claim = [&](int wire, const char* role) {
    if (wire < 0 || wire >= num_qubits)
      throw ValidationError(std::string(role) + " wire " + std::to_string(wire) +
                            " out of range for " + std::to_string(num_qubits) + " qubits");
    const std::uint64_t bit = std::uint64_t{1} << wire;
    if (seen & bit)
      throw ValidationError("gate wires must be pairwise disjoint (wire " +
                            std::to_string(wire) + " repeated)");
    seen |= bit;
  };
  for (int t : g.targets) claim(t, "target");
  for (int c : g.controls) claim(c, "control");
}

template <typename Scalar>
std::uint64_t control_mask(const Gate<Scalar>& g) {
  std::uint64_t mask = 0;
  for (int c : g.controls) mask |= std::uint64_t{1} << c;
  return mask;
}

}  // namespace detail

// Applies one gate in place. With `adjoint` the conjugate transpose of the
// gate matrix is used. Control wires gate the update, which turns any scalar
// prefactor of the target matrix into a relative phase (diag(I, U) exactly).
template <typename Scalar>
void apply_gate(StateVector<Scalar>& state, const Gate<Scalar>& gate, bool adjoint = false) {
  using C = ComplexT<Scalar>;
  detail::check_wires(gate, state.num_qubits());
  if (gate.kind == GateKind::Unitary && unitarity_defect<Scalar>(gate.matrix) > Scalar(1e-12))
    throw ValidationError("explicit gate matrix is not unitary within 1e-12");

  MatrixT<Scalar> u = gate.unitary();
  if (adjoint) u = u.adjoint().eval();
  const std::uint64_t cmask = detail::control_mask(gate);
  const std::uint64_t dim = state.dimension();
  auto& a = state.amplitudes();

  if (gate.arity() == 1) {
    const std::uint64_t tbit = std::uint64_t{1} << gate.targets[0];
    const C u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & tbit) || (i & cmask) != cmask) continue;
      const std::uint64_t j = i | tbit;
      const C lo = a(static_cast<Eigen::Index>(i));
      const C hi = a(static_cast<Eigen::Index>(j));
      a(static_cast<Eigen::Index>(i)) = u00 * lo + u01 * hi;
      a(static_cast<Eigen::Index>(j)) = u10 * lo + u11 * hi;
    }
    return;
  }

  const std::uint64_t b0 = std::uint64_t{1} << gate.targets[0];
  const std::uint64_t b1 = std::uint64_t{1} << gate.targets[1];
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & (b0 | b1)) || (i & cmask) != cmask) continue;
    const std::uint64_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
    C in[4], out[4];
    for (int k = 0; k < 4; ++k) in[k] = a(static_cast<Eigen::Index>(idx[k]));
    for (int r = 0; r < 4; ++r) {
      out[r] = C(0, 0);
      for (int c = 0; c < 4; ++c) out[r] += u(r, c) * in[c];
    }
    for (int k = 0; k < 4; ++k) a(static_cast<Eigen::Index>(idx[k])) = out[k];
  }
}

enum class Direction { Forward, Inverse };

// Forward applies the gates in order; inverse applies each adjoint in
// reverse order, so forward followed by inverse is the identity.
template <typename Scalar>
void apply_circuit(StateVector<Scalar>& state, std::span<const Gate<Scalar>> gates,
                   Direction direction = Direction::Forward) {
  if (direction == Direction::Forward) {
    for (const auto& g : gates) apply_gate(state, g);
  } else {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) apply_gate(state, *it, true);
  }
}

template <typename Scalar>
void apply_circuit(StateVector<Scalar>& state, const std::vector<Gate<Scalar>>& gates,
                   Direction direction = Direction::Forward) {
  apply_circuit(state, std::span<const Gate<Scalar>>(gates), direction);
}

// Dense matrix of a gate sequence, built column by column. Oracle support
// only, hence the tight qubit guard.
template <typename Scalar>
MatrixT<Scalar> dense_unitary(const std::vector<Gate<Scalar>>& gates, int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxDenseQubits)
    throw GuardError("dense_unitary limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  const std::uint64_t dim = dim_of(num_qubits);
  MatrixT<Scalar> m(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    auto s = StateVector<Scalar>::basis_state(num_qubits, col);
    apply_circuit(s, gates);
    m.col(static_cast<Eigen::Index>(col)) = s.amplitudes();
  }
  return m;
}

// Projective measurement of the listed qubits in the computational basis.
// Bit i of the outcome is the measured value of `qubits[i]`. The state is
// collapsed and renormalized in place. Deterministic given the stream.
template <typename Scalar>
std::uint64_t measure_register(StateVector<Scalar>& state, std::span<const int> qubits,
                               RandomStream& rng) {
  const std::uint64_t dim = state.dimension();
  const std::size_t k = qubits.size();
  std::vector<Scalar> prob(dim_of(static_cast<int>(k)), Scalar(0));
  auto& a = state.amplitudes();
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::uint64_t o = 0;
    for (std::size_t b = 0; b < k; ++b) o |= ((i >> qubits[b]) & 1u) << b;
    prob[o] += std::norm(a(static_cast<Eigen::Index>(i)));
  }
  const double u = rng.uniform();
  std::uint64_t outcome = 0;
  Scalar acc = 0;
  for (std::uint64_t o = 0; o < prob.size(); ++o) {
    acc += prob[o];
    if (u < acc) {
      outcome = o;
      break;
    }
    if (o + 1 == prob.size()) outcome = o;  // guard against rounding at u ~ 1
  }
  assert(prob[outcome] > Scalar(0) && "zero-probability branch selected");
  const Scalar scale = Scalar(1) / std::sqrt(prob[outcome]);
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::uint64_t o = 0;
    for (std::size_t b = 0; b < k; ++b) o |= ((i >> qubits[b]) & 1u) << b;
    if (o == outcome)
      a(static_cast<Eigen::Index>(i)) *= scale;
    else
      a(static_cast<Eigen::Index>(i)) = ComplexT<Scalar>(0, 0);
  }
  return outcome;
}

template <typename Scalar>
std::uint64_t measure_register(StateVector<Scalar>& state, const std::vector<int>& qubits,
                               RandomStream& rng) {
  return measure_register(state, std::span<const int>(qubits), rng);
}

// Binary projective measurement {P, I - P} where P keeps the basis states
// selected by `keep`. Returns true when the P branch is taken.
template <typename Scalar, typename KeepFn>
bool measure_binary(StateVector<Scalar>& state, KeepFn&& keep, RandomStream& rng) {
  const std::uint64_t dim = state.dimension();
  auto& a = state.amplitudes();
  Scalar p = 0;
  for (std::uint64_t i = 0; i < dim; ++i)
    if (keep(i)) p += std::norm(a(static_cast<Eigen::Index>(i)));
  const bool taken = rng.uniform() < static_cast<double>(p);
  const Scalar branch = taken ? p : Scalar(1) - p;
  assert(branch > Scalar(0) && "zero-probability branch selected");
  const Scalar scale = Scalar(1) / std::sqrt(branch);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (keep(i) == taken)
      a(static_cast<Eigen::Index>(i)) *= scale;
    else
      a(static_cast<Eigen::Index>(i)) = ComplexT<Scalar>(0, 0);
  }
  return taken;
}

}  // namespace qamp
