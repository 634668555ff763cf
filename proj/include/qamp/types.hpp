#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qamp {

// Qubit ordering is little-endian everywhere: bit k of a basis-state index
// is the value of qubit k.
template <typename Scalar>
using ComplexT = std::complex<Scalar>;

template <typename Scalar>
using VectorT = Eigen::Matrix<ComplexT<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixT = Eigen::Matrix<ComplexT<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

using Real = double;
using Cplx = ComplexT<Real>;
using CVector = VectorT<Real>;
using CMatrix = MatrixT<Real>;

inline constexpr int kMaxStateQubits = 24;
inline constexpr int kMaxDenseQubits = 10;

// Thrown when a request exceeds the desk-scale memory guards.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on contract violations in inputs (bad indices, non-unitary gates,
// malformed configuration).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

template <typename Scalar = double>
constexpr Scalar pi() {
  return Scalar(3.14159265358979323846L);
}

inline std::uint64_t dim_of(int num_qubits) { return std::uint64_t{1} << num_qubits; }

}  // namespace qamp
