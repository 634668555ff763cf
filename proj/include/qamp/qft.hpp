#pragma once

#include <vector>

#include "qamp/circuit.hpp"

namespace qamp {

namespace detail {

inline void check_register(std::span<const int> reg, int num_qubits) {
  std::uint64_t seen = 0;
  for (int q : reg) {
    if (q < 0 || q >= num_qubits) throw ValidationError("register wire out of range");
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) throw ValidationError("register lists a wire twice");
    seen |= bit;
  }
}

}  // namespace detail

// Fourier transform on the listed register, little-endian in the list:
// |j> -> 2^{-t/2} sum_k exp(2*pi*i*j*k / 2^t) |k>, identity elsewhere.
template <typename Scalar>
void apply_qft(StateVector<Scalar>& state, std::span<const int> reg) {
  detail::check_register(reg, state.num_qubits());
  const int t = static_cast<int>(reg.size());
  for (int l = t - 1; l >= 0; --l) {
    apply_gate(state, make_gate<Scalar>(GateKind::H, {reg[l]}));
    for (int m = l - 1; m >= 0; --m) {
      const Scalar angle = Scalar(2) * pi<Scalar>() / Scalar(std::uint64_t{1} << (l - m + 1));
      apply_gate(state, make_gate<Scalar>(GateKind::Phase, {reg[l]}, {reg[m]}, angle));
    }
  }
  for (int i = 0; i < t / 2; ++i)
    apply_gate(state, make_gate<Scalar>(GateKind::Swap, {reg[i], reg[t - 1 - i]}));
}

template <typename Scalar>
void apply_inverse_qft(StateVector<Scalar>& state, std::span<const int> reg) {
  detail::check_register(reg, state.num_qubits());
  const int t = static_cast<int>(reg.size());
  for (int i = 0; i < t / 2; ++i)
    apply_gate(state, make_gate<Scalar>(GateKind::Swap, {reg[i], reg[t - 1 - i]}));
  for (int l = 0; l < t; ++l) {
    for (int m = 0; m < l; ++m) {
      const Scalar angle = -Scalar(2) * pi<Scalar>() / Scalar(std::uint64_t{1} << (l - m + 1));
      apply_gate(state, make_gate<Scalar>(GateKind::Phase, {reg[l]}, {reg[m]}, angle));
    }
    apply_gate(state, make_gate<Scalar>(GateKind::H, {reg[l]}));
  }
}

template <typename Scalar>
void apply_qft(StateVector<Scalar>& state, const std::vector<int>& reg) {
  apply_qft(state, std::span<const int>(reg));
}

template <typename Scalar>
void apply_inverse_qft(StateVector<Scalar>& state, const std::vector<int>& reg) {
  apply_inverse_qft(state, std::span<const int>(reg));
}

}  // namespace qamp
