#pragma once

#include <vector>

#include "qamp/verifier.hpp"

namespace qamp {

// Resource plan for phase-estimation amplification, derived from the promise
// bounds. The two grid phases phi_a < phi_b must be told apart, which fixes
// the precision, the register width, and the walk-step budget.
struct PrecisionPlan {
  double a = 0.0;
  double b = 0.0;
  int rounds = 0;

  double phi_a = 0.0;            // arccos(sqrt(a)) / pi
  double phi_b = 0.0;            // arccos(sqrt(b)) / pi
  double delta_phi = 0.0;        // (phi_b - phi_a) / 2
  double taylor_gap_bound = 0.0; // (a - b) / (pi (sqrt(a) + sqrt(b))) <= phi_b - phi_a

  double eps_pe = 1.0 / 16.0;  // per-round phase-estimation failure budget
  int n_bits = 0;              // ceil(log2(1 / (phi_b - phi_a)))
  int t_bits = 0;              // n_bits + ceil(log2(2 + 1/(2 eps_pe)))

  std::uint64_t walk_steps_per_round = 0;  // 2^t - 1 controlled walk steps
  std::uint64_t total_walk_steps = 0;      // rounds * walk_steps_per_round
  double walk_steps_real_bound = 0.0;      // 10 pi (sqrt(a)+sqrt(b)) / (a-b)

  std::uint64_t baseline_measurements = 0;  // ceil(2 rounds / (a-b)^2)

  double accept_threshold() const { return 0.5 * (phi_a + phi_b); }
};

// eps_pe must lie in (0, 1/2); the default 1/16 yields the 2^-r confidence
// of the median rule.
PrecisionPlan plan_precision(const PromiseParameters& params, double eps_pe = 1.0 / 16.0);

// Maps a raw phase in [0, 1) to its magnitude in [0, 1/2]: estimates in the
// upper half are readings of the negative eigenphase.
double fold_phase(double raw_phi);

// Probability bound for the median of r samples leaving the good interval
// when each sample leaves it independently with probability eps:
// (1/2) * (2 sqrt(eps (1 - eps)))^r.
double median_fail_bound(double eps, int rounds);

// Lower middle order statistic; the input is consumed.
double lower_median(std::vector<double> values);

}  // namespace qamp
