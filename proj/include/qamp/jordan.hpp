#pragma once

#include <vector>

#include "qamp/projectors.hpp"

namespace qamp {

// phi = arccos(sqrt(p)) / pi, the inverse of p = cos^2(pi * phi).
double principal_angle(double p);

// Invariant plane of the two projectors: v spans the zero-ancilla side,
// w the accepting side, with <v|w> = sqrt(p) real and nonnegative.
struct TwoDimSubspace {
  double p = 0.0;
  double phi = 0.0;
  StateVector<> v, v_perp, w, w_perp;
};

// Invariant line: simultaneous eigenvector of both projectors with
// eigenvalues accept_ev (accepting projector) and anczero_ev (zero-ancilla
// projector), each 0 or 1.
struct OneDimSubspace {
  int accept_ev = 0;
  int anczero_ev = 0;
  StateVector<> vec;

  // Eigenvalue of the two-reflection walk operator on this line.
  int walk_sign() const { return accept_ev == anczero_ev ? +1 : -1; }
};

struct JordanDecomposition {
  std::vector<TwoDimSubspace> planes;
  std::vector<OneDimSubspace> lines;
  std::uint64_t dimension = 0;

  // Largest acceptance probability achievable with zero ancillae: the best
  // plane, or 1 when a (1,1) line exists.
  double max_acceptance() const;
  std::uint64_t basis_count() const { return 2 * planes.size() + lines.size(); }
};

// Splits the full Hilbert space into invariant planes and lines of the two
// projectors, via the spectrum of the acceptance operator on the
// zero-ancilla subspace plus the accepting projector on the residual space.
// Eigenvalues within 1e-10 of 0 or 1 are classified as lines.
JordanDecomposition jordan_decompose(const VerifierCircuit& circuit);

// Dense projectors rebuilt from the decomposition data; agreement with the
// directly built projectors is the completeness check.
CMatrix reconstruct_zero_anc_projector(const JordanDecomposition& decomp);
CMatrix reconstruct_accept_projector(const JordanDecomposition& decomp);

// Dense accepting projector, column by column.
CMatrix dense_accept_projector(const VerifierCircuit& circuit);

}  // namespace qamp
