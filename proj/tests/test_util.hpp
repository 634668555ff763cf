#pragma once

#include <cmath>
#include <vector>

#include "qamp/statevector.hpp"

namespace qamp::testing {

inline double max_abs_diff(const CVector& a, const CVector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Fidelity up to a global phase: |<a|b>|^2.
inline double overlap2(const StateVector<>& a, const StateVector<>& b) { return a.fidelity(b); }

// Textbook DFT matrix: F[j][k] = 2^{-t/2} exp(2 pi i j k / 2^t). Independent
// oracle for the Fourier-transform circuits.
inline CMatrix dft_matrix(int t_bits) {
  const std::uint64_t dim = dim_of(t_bits);
  CMatrix f(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::uint64_t j = 0; j < dim; ++j)
    for (std::uint64_t k = 0; k < dim; ++k)
      f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          std::polar(scale, 2.0 * pi() * static_cast<double>(j * k % dim) / static_cast<double>(dim));
  return f;
}

// Regularized upper incomplete gamma Q(a, x), series + continued fraction.
inline double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) return 0.0;
  if (x == 0.0) return 1.0;
  const double gln = std::lgamma(a);
  if (x < a + 1.0) {
    // lower series
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-14) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
  }
  // upper continued fraction
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-14) break;
  }
  return std::exp(-x + a * std::log(x) - gln) * h;
}

// Pearson chi-square p-value of observed counts against expected counts,
// merging bins with expectation below 5 into their neighbors from both ends.
inline double chi_square_pvalue(std::vector<double> observed, std::vector<double> expected) {
  auto merge = [&](bool from_front) {
    while (expected.size() > 1) {
      const std::size_t i = from_front ? 0 : expected.size() - 1;
      const std::size_t j = from_front ? 1 : expected.size() - 2;
      if (expected[i] >= 5.0) break;
      expected[j] += expected[i];
      observed[j] += observed[i];
      expected.erase(expected.begin() + i);
      observed.erase(observed.begin() + i);
    }
  };
  merge(true);
  merge(false);
  double chi2 = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double diff = observed[i] - expected[i];
    chi2 += diff * diff / expected[i];
  }
  const double dof = static_cast<double>(expected.size()) - 1.0;
  if (dof < 1.0) return 1.0;
  return gamma_q(dof / 2.0, chi2 / 2.0);
}

inline double binomial_pmf(int n, double p, int k) {
  double log_pmf = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                   k * std::log(p) + (n - k) * std::log1p(-p);
  return std::exp(log_pmf);
}

}  // namespace qamp::testing
