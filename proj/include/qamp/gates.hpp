#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qamp/types.hpp"

namespace qamp {

enum class GateKind {
  H,
  X,
  Y,
  Z,
  S,
  T,
  Phase,  // diag(1, e^{i*angle})
  RotX,
  RotY,
  RotZ,
  CX,  // control = targets[0], target = targets[1]
  CZ,
  Swap,
  Unitary,  // explicit 2x2 or 4x4 matrix
};

// One gate acting on one or two target wires, optionally conditioned on any
// number of extra control wires (all of which must read 1).
//
// For two-target gates the 4x4 matrix is indexed little-endian in the target
// list: local index = bit(targets[0]) + 2 * bit(targets[1]).
template <typename Scalar = double>
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> targets;
  std::vector<int> controls;
  Scalar angle = Scalar(0);
  MatrixT<Scalar> matrix;  // only for GateKind::Unitary

  int arity() const {
    switch (kind) {
      case GateKind::CX:
      case GateKind::CZ:
      case GateKind::Swap:
        return 2;
      case GateKind::Unitary:
        return matrix.rows() == 4 ? 2 : 1;
      default:
        return 1;
    }
  }

  MatrixT<Scalar> unitary() const;
};

namespace detail {

template <typename Scalar>
MatrixT<Scalar> mat2(ComplexT<Scalar> a, ComplexT<Scalar> b, ComplexT<Scalar> c,
                     ComplexT<Scalar> d) {
  MatrixT<Scalar> m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace detail

template <typename Scalar>
MatrixT<Scalar> Gate<Scalar>::unitary() const {
  using C = ComplexT<Scalar>;
  const Scalar half = angle / Scalar(2);
  switch (kind) {
    case GateKind::H: {
      const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
      return detail::mat2<Scalar>(C(s, 0), C(s, 0), C(s, 0), C(-s, 0));
    }
    case GateKind::X:
      return detail::mat2<Scalar>(C(0, 0), C(1, 0), C(1, 0), C(0, 0));
    case GateKind::Y:
      return detail::mat2<Scalar>(C(0, 0), C(0, -1), C(0, 1), C(0, 0));
    case GateKind::Z:
      return detail::mat2<Scalar>(C(1, 0), C(0, 0), C(0, 0), C(-1, 0));
    case GateKind::S:
      return detail::mat2<Scalar>(C(1, 0), C(0, 0), C(0, 0), C(0, 1));
    case GateKind::T:
      return detail::mat2<Scalar>(C(1, 0), C(0, 0), C(0, 0),
                                  std::polar(Scalar(1), pi<Scalar>() / Scalar(4)));
    case GateKind::Phase:
      return detail::mat2<Scalar>(C(1, 0), C(0, 0), C(0, 0), std::polar(Scalar(1), angle));
    case GateKind::RotX:
      return detail::mat2<Scalar>(C(std::cos(half), 0), C(0, -std::sin(half)),
                                  C(0, -std::sin(half)), C(std::cos(half), 0));
    case GateKind::RotY:
      return detail::mat2<Scalar>(C(std::cos(half), 0), C(-std::sin(half), 0),
                                  C(std::sin(half), 0), C(std::cos(half), 0));
    case GateKind::RotZ:
      return detail::mat2<Scalar>(std::polar(Scalar(1), -half), C(0, 0), C(0, 0),
                                  std::polar(Scalar(1), half));
    case GateKind::CX: {
      MatrixT<Scalar> m = MatrixT<Scalar>::Identity(4, 4);
      // control = targets[0] (low local bit), target = targets[1]
      m(1, 1) = C(0, 0);
      m(3, 3) = C(0, 0);
      m(1, 3) = C(1, 0);
      m(3, 1) = C(1, 0);
      return m;
    }
    case GateKind::CZ: {
      MatrixT<Scalar> m = MatrixT<Scalar>::Identity(4, 4);
      m(3, 3) = C(-1, 0);
      return m;
    }
    case GateKind::Swap: {
      MatrixT<Scalar> m = MatrixT<Scalar>::Identity(4, 4);
      m(1, 1) = C(0, 0);
      m(2, 2) = C(0, 0);
      m(1, 2) = C(1, 0);
      m(2, 1) = C(1, 0);
      return m;
    }
    case GateKind::Unitary:
      return matrix;
  }
  throw ValidationError("unknown gate kind");
}

// Max-entry deviation of U^dagger U from the identity.
template <typename Scalar>
Scalar unitarity_defect(const MatrixT<Scalar>& u) {
  const MatrixT<Scalar> g = u.adjoint() * u - MatrixT<Scalar>::Identity(u.rows(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

template <typename Scalar = double>
Gate<Scalar> make_gate(GateKind kind, std::vector<int> targets, std::vector<int> controls = {},
                       Scalar angle = Scalar(0)) {
  Gate<Scalar> g;
  g.kind = kind;
  g.targets = std::move(targets);
  g.controls = std::move(controls);
  g.angle = angle;
  return g;
}

template <typename Scalar = double>
Gate<Scalar> make_unitary_gate(MatrixT<Scalar> matrix, std::vector<int> targets,
                               std::vector<int> controls = {}) {
  if (!((matrix.rows() == 2 && matrix.cols() == 2) || (matrix.rows() == 4 && matrix.cols() == 4)))
    throw ValidationError("explicit gate matrix must be 2x2 or 4x4");
  if (unitarity_defect<Scalar>(matrix) > Scalar(1e-12))
    throw ValidationError("explicit gate matrix is not unitary within 1e-12");
  Gate<Scalar> g;
  g.kind = GateKind::Unitary;
  g.targets = std::move(targets);
  g.controls = std::move(controls);
  g.matrix = std::move(matrix);
  return g;
}

inline const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::T: return "t";
    case GateKind::Phase: return "p";
    case GateKind::RotX: return "rx";
    case GateKind::RotY: return "ry";
    case GateKind::RotZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::Swap: return "swap";
    case GateKind::Unitary: return "unitary";
  }
  return "?";
}

}  // namespace qamp
