#include "qamp/plan.hpp"

#include <algorithm>
#include <cmath>

#include "qamp/jordan.hpp"

namespace qamp {

PrecisionPlan plan_precision(const PromiseParameters& params, double eps_pe) {
  params.check();
  if (!(eps_pe > 0.0 && eps_pe < 0.5))
    throw ValidationError("eps_pe must lie strictly inside (0, 1/2)");

  PrecisionPlan plan;
  plan.a = params.a;
  plan.b = params.b;
  plan.rounds = params.rounds;
  plan.eps_pe = eps_pe;

  plan.phi_a = principal_angle(params.a);
  plan.phi_b = principal_angle(params.b);
  const double gap = plan.phi_b - plan.phi_a;
  plan.delta_phi = gap / 2.0;
  plan.taylor_gap_bound =
      (params.a - params.b) / (pi() * (std::sqrt(params.a) + std::sqrt(params.b)));
  if (gap < plan.taylor_gap_bound)
    throw std::runtime_error("phase gap fell below its analytic lower bound");

  plan.n_bits = static_cast<int>(std::ceil(std::log2(1.0 / gap)));
  plan.t_bits = plan.n_bits + static_cast<int>(std::ceil(std::log2(2.0 + 1.0 / (2.0 * eps_pe))));
  if (plan.t_bits < 1 || plan.t_bits > 62)
    throw GuardError("phase register of " + std::to_string(plan.t_bits) + " qubits is infeasible");

  plan.walk_steps_per_round = dim_of(plan.t_bits) - 1;
  plan.total_walk_steps = plan.walk_steps_per_round * static_cast<std::uint64_t>(params.rounds);
  plan.walk_steps_real_bound =
      10.0 * pi() * (std::sqrt(params.a) + std::sqrt(params.b)) / (params.a - params.b);
  plan.baseline_measurements = static_cast<std::uint64_t>(
      std::ceil(2.0 * params.rounds / ((params.a - params.b) * (params.a - params.b))));
  return plan;
}

double fold_phase(double raw_phi) {
  if (raw_phi < 0.0 || raw_phi >= 1.0)
    throw ValidationError("raw phase must lie in [0, 1)");
  return std::min(raw_phi, 1.0 - raw_phi);
}

double median_fail_bound(double eps, int rounds) {
  if (!(eps > 0.0 && eps < 0.5)) throw ValidationError("median bound needs eps in (0, 1/2)");
  if (rounds < 0) throw ValidationError("round count must be nonnegative");
  return 0.5 * std::pow(2.0 * std::sqrt(eps * (1.0 - eps)), rounds);
}

double lower_median(std::vector<double> values) {
  if (values.empty()) throw ValidationError("median of an empty sample");
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

}  // namespace qamp
