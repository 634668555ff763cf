#pragma once

#include <cassert>
#include <cstdint>
#include <utility>

#include "qamp/rng.hpp"
#include "qamp/types.hpp"

namespace qamp {

// Dense complex amplitude vector over the computational basis of `num_qubits`
// wires. Unitary evolution keeps the squared norm at 1; projections shrink it.
template <typename Scalar = double>
class StateVector {
 public:
  using Complex = ComplexT<Scalar>;
  using Vector = VectorT<Scalar>;

  StateVector() : StateVector(0) {}

  explicit StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubits(num_qubits);
    amps_ = Vector::Zero(static_cast<Eigen::Index>(dim_of(num_qubits)));
    amps_(0) = Complex(1, 0);
  }

  static StateVector basis_state(int num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    s.amps_(0) = Complex(0, 0);
    s.amps_(static_cast<Eigen::Index>(index)) = Complex(1, 0);
    return s;
  }

  static StateVector from_amplitudes(int num_qubits, Vector amplitudes) {
    check_qubits(num_qubits);
    if (static_cast<std::uint64_t>(amplitudes.size()) != dim_of(num_qubits))
      throw ValidationError("amplitude vector length does not match 2^num_qubits");
    StateVector s(num_qubits);
    s.amps_ = std::move(amplitudes);
    return s;
  }

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return static_cast<std::uint64_t>(amps_.size()); }

  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }

  Complex amp(std::uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }
  Complex& amp(std::uint64_t index) { return amps_(static_cast<Eigen::Index>(index)); }

  Scalar squared_norm() const { return amps_.squaredNorm(); }

  void renormalize() {
    const Scalar n2 = squared_norm();
    assert(n2 > Scalar(0));
    amps_ /= std::sqrt(n2);
  }

  Complex inner_product(const StateVector& other) const {
    assert(num_qubits_ == other.num_qubits_);
    return amps_.dot(other.amps_);  // conjugates *this
  }

  Scalar fidelity(const StateVector& other) const {
    const Complex overlap = inner_product(other);
    return std::norm(overlap);
  }

 private:
  static void check_qubits(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxStateQubits)
      throw GuardError("statevector qubit count outside [0, " +
                       std::to_string(kMaxStateQubits) + "]");
  }

  int num_qubits_;
  Vector amps_;
};

// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
template <typename Scalar = double>
StateVector<Scalar> random_state(int num_qubits, RandomStream& rng) {
  StateVector<Scalar> s(num_qubits);
  auto& a = s.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i)
    a(i) = typename StateVector<Scalar>::Complex(rng.gaussian(), rng.gaussian());
  s.renormalize();
  return s;
}

// Tensor product placing `high` on the upper wires: index = h * dim(low) + l.
template <typename Scalar>
StateVector<Scalar> tensor_high(const StateVector<Scalar>& low, const StateVector<Scalar>& high) {
  StateVector<Scalar> out(low.num_qubits() + high.num_qubits());
  auto& a = out.amplitudes();
  const std::uint64_t dl = low.dimension();
  for (std::uint64_t h = 0; h < high.dimension(); ++h)
    for (std::uint64_t l = 0; l < dl; ++l)
      a(static_cast<Eigen::Index>(h * dl + l)) = high.amp(h) * low.amp(l);
  return out;
}

// Appends `count` fresh |0> wires above the existing ones.
template <typename Scalar>
StateVector<Scalar> append_zero_qubits(const StateVector<Scalar>& s, int count) {
  StateVector<Scalar> out(s.num_qubits() + count);
  out.amplitudes().setZero();
  out.amplitudes().head(s.amplitudes().size()) = s.amplitudes();
  return out;
}

// Drops the upper wires, which must be in the basis state `upper_value`
// (e.g. just measured). The surviving block is returned unchanged.
template <typename Scalar>
StateVector<Scalar> extract_lower_qubits(const StateVector<Scalar>& s, int keep,
                                         std::uint64_t upper_value) {
  const std::uint64_t dl = dim_of(keep);
  StateVector<Scalar> out(keep);
  out.amplitudes() =
      s.amplitudes().segment(static_cast<Eigen::Index>(upper_value * dl), static_cast<Eigen::Index>(dl));
  return out;
}

}  // namespace qamp
