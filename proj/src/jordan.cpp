#include "qamp/jordan.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace qamp {

namespace {

constexpr double kLineThreshold = 1e-10;

StateVector<> column_state(int num_qubits, const CMatrix& m, Eigen::Index col) {
  return StateVector<>::from_amplitudes(num_qubits, m.col(col));
}

}  // namespace

double principal_angle(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12)
    throw ValidationError("probability outside [0, 1] beyond 1e-12 slack");
  p = std::min(1.0, std::max(0.0, p));
  return std::acos(std::sqrt(p)) / pi();
}

double JordanDecomposition::max_acceptance() const {
  double best = 0.0;
  for (const auto& plane : planes) best = std::max(best, plane.p);
  for (const auto& line : lines)
    if (line.accept_ev == 1 && line.anczero_ev == 1) best = std::max(best, 1.0);
  return best;
}

CMatrix dense_accept_projector(const VerifierCircuit& circuit) {
  const int total = circuit.total_qubits();
  const std::uint64_t dim = dim_of(total);
  CMatrix p1(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    auto s = project_accepting(StateVector<>::basis_state(total, col), circuit);
    p1.col(static_cast<Eigen::Index>(col)) = s.amplitudes();
  }
  return p1;
}

JordanDecomposition jordan_decompose(const VerifierCircuit& circuit) {
  const int n = circuit.num_witness_qubits;
  const int total = circuit.total_qubits();
  if (total > kMaxDenseQubits)
    throw GuardError("jordan_decompose limited to " + std::to_string(kMaxDenseQubits) +
                     " total qubits");
  const std::uint64_t dim = dim_of(total);
  const std::uint64_t dn = dim_of(n);

  JordanDecomposition decomp;
  decomp.dimension = dim;

  // Stage 1: spectrum of the acceptance operator on the zero-ancilla
  // subspace. Each eigenpair either seeds a plane (0 < p < 1) or is itself
  // an invariant line.
  CMatrix accept(dn, dn);
  for (std::uint64_t col = 0; col < dn; ++col) {
    auto s = project_accepting(StateVector<>::basis_state(total, col), circuit);
    for (std::uint64_t row = 0; row < dn; ++row)
      accept(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s.amp(row);
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> zero_anc_solver(accept);
  if (zero_anc_solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition of the acceptance operator failed");

  CMatrix emitted(dim, dim);  // columns: orthonormal vectors accounted for so far
  Eigen::Index emitted_count = 0;

  for (std::uint64_t k = 0; k < dn; ++k) {
    const double p = zero_anc_solver.eigenvalues()(static_cast<Eigen::Index>(k));
    CVector v_full = CVector::Zero(static_cast<Eigen::Index>(dim));
    v_full.head(static_cast<Eigen::Index>(dn)) =
        zero_anc_solver.eigenvectors().col(static_cast<Eigen::Index>(k));
    auto v = StateVector<>::from_amplitudes(total, v_full);

    if (p >= 1.0 - kLineThreshold) {
      decomp.lines.push_back({1, 1, v});
      emitted.col(emitted_count++) = v.amplitudes();
      continue;
    }
    if (p <= kLineThreshold) {
      decomp.lines.push_back({0, 1, v});
      emitted.col(emitted_count++) = v.amplitudes();
      continue;
    }

    TwoDimSubspace plane;
    plane.p = p;
    plane.phi = principal_angle(p);
    plane.v = v;

    auto w = project_accepting(v, circuit);
    const double wnorm = std::sqrt(w.squared_norm());
    w.amplitudes() /= wnorm;  // <v|w> = p / ||P_accept v|| >= 0 automatically
    plane.w = w;

    const double sqrt_p = wnorm;
    const double sqrt_q = std::sqrt(std::max(0.0, 1.0 - p));

    auto v_perp = StateVector<>::from_amplitudes(
        total, ((w.amplitudes() - sqrt_p * v.amplitudes()) / sqrt_q).eval());
    v_perp.amplitudes() -= v.amplitudes() * v.inner_product(v_perp);
    v_perp.renormalize();
    plane.v_perp = v_perp;

    auto w_perp = StateVector<>::from_amplitudes(
        total, ((v.amplitudes() - sqrt_p * w.amplitudes()) / sqrt_q).eval());
    w_perp.amplitudes() -= w.amplitudes() * w.inner_product(w_perp);
    w_perp.renormalize();
    plane.w_perp = w_perp;

    emitted.col(emitted_count++) = plane.v.amplitudes();
    emitted.col(emitted_count++) = plane.v_perp.amplitudes();
    decomp.planes.push_back(std::move(plane));
  }

  // Stage 2: the orthogonal complement of everything emitted carries no
  // zero-ancilla component, so the accepting projector restricted to it must
  // split cleanly into eigenvalue-0 and eigenvalue-1 lines.
  const Eigen::Index residual = static_cast<Eigen::Index>(dim) - emitted_count;
  if (residual > 0) {
    Eigen::HouseholderQR<CMatrix> qr(emitted.leftCols(emitted_count));
    CMatrix q = qr.householderQ();
    const CMatrix basis = q.rightCols(residual);

    const CMatrix p1 = dense_accept_projector(circuit);
    const CMatrix restricted = basis.adjoint() * p1 * basis;
    Eigen::SelfAdjointEigenSolver<CMatrix> residual_solver(restricted);
    if (residual_solver.info() != Eigen::Success)
      throw std::runtime_error("eigendecomposition of the residual block failed");

    for (Eigen::Index k = 0; k < residual; ++k) {
      const double lambda = residual_solver.eigenvalues()(k);
      const CVector u = basis * residual_solver.eigenvectors().col(k);
      if (lambda >= 1.0 - kLineThreshold) {
        decomp.lines.push_back({1, 0, StateVector<>::from_amplitudes(total, u)});
      } else if (lambda <= kLineThreshold) {
        decomp.lines.push_back({0, 0, StateVector<>::from_amplitudes(total, u)});
      } else {
        throw std::runtime_error(
            "residual eigenvalue " + std::to_string(lambda) +
            " is neither 0 nor 1 within threshold; classification failed");
      }
    }
  }
  return decomp;
}

namespace {

CMatrix accumulate_projector(const JordanDecomposition& decomp, bool accepting) {
  const std::uint64_t dim = decomp.dimension;
  CMatrix p = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& plane : decomp.planes) {
    const auto& vec = accepting ? plane.w.amplitudes() : plane.v.amplitudes();
    p.noalias() += vec * vec.adjoint();
  }
  for (const auto& line : decomp.lines) {
    const int ev = accepting ? line.accept_ev : line.anczero_ev;
    if (ev == 1) p.noalias() += line.vec.amplitudes() * line.vec.amplitudes().adjoint();
  }
  return p;
}

}  // namespace

CMatrix reconstruct_zero_anc_projector(const JordanDecomposition& decomp) {
  return accumulate_projector(decomp, false);
}

CMatrix reconstruct_accept_projector(const JordanDecomposition& decomp) {
  return accumulate_projector(decomp, true);
}

}  // namespace qamp
