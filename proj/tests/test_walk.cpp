#include <cmath>

#include "doctest.h"
#include "qamp/amplifier.hpp"
#include "qamp/jordan.hpp"
#include "qamp/planted.hpp"
#include "test_util.hpp"

using namespace qamp;
using qamp::testing::max_abs_diff;

namespace {

VerifierCircuit identity_verifier(int n, int m) {
  VerifierCircuit c;
  c.num_witness_qubits = n;
  c.num_ancilla_qubits = m;
  c.output_qubit = n;
  return c;
}

// Eigenvector candidates (v +- i v_perp)/sqrt(2) of the walk inside a plane.
StateVector<> plane_eigvec(const TwoDimSubspace& plane, int sign) {
  auto out = plane.v;
  out.amplitudes() =
      (plane.v.amplitudes() + Cplx(0, sign) * plane.v_perp.amplitudes()) / std::sqrt(2.0);
  return out;
}

// Returns the phase of W|state> assuming it is an eigenvector; checks the
// residual is tiny.
double walk_eigenphase(const VerifierCircuit& circuit, const StateVector<>& state) {
  QueryCounter counter;
  auto moved = state;
  apply_walk(moved, circuit, counter);
  const Cplx lambda = state.inner_product(moved);
  REQUIRE(std::abs(std::abs(lambda) - 1.0) < 1e-9);
  const CVector residual = moved.amplitudes() - lambda * state.amplitudes();
  REQUIRE(residual.cwiseAbs().maxCoeff() < 1e-9);
  return std::arg(lambda);
}

}  // namespace

TEST_CASE("zero-ancilla reflection fixes and negates the right states") {
  RandomStream rng(2);
  const auto circuit = identity_verifier(1, 1);
  QueryCounter counter;

  auto fixed = tensor_high(random_state(1, rng), StateVector<>(1));
  const auto fixed_before = fixed;
  apply_reflection(fixed, Reflection::ZeroAncillas, circuit, counter);
  CHECK(max_abs_diff(fixed.amplitudes(), fixed_before.amplitudes()) == 0.0);

  auto negated = tensor_high(random_state(1, rng), StateVector<>::basis_state(1, 1));
  const auto negated_before = negated;
  apply_reflection(negated, Reflection::ZeroAncillas, circuit, counter);
  CHECK(max_abs_diff(negated.amplitudes(), (-negated_before.amplitudes()).eval()) == 0.0);
  CHECK(counter.v == 0);  // no circuit evaluations for the ancilla reflection
}

TEST_CASE("controlled accepting reflection as a dense 3-qubit block") {
  const auto circuit = identity_verifier(1, 1);  // wires 0,1; output 1
  const int control = 2;

  CMatrix dense(8, 8);
  for (std::uint64_t col = 0; col < 8; ++col) {
    QueryCounter counter;
    auto s = StateVector<>::basis_state(3, col);
    apply_reflection(s, Reflection::Accepting, circuit, counter, control);
    dense.col(static_cast<Eigen::Index>(col)) = s.amplitudes();
    CHECK(counter.v == 1);
    CHECK(counter.v_dag == 1);
  }

  CMatrix expected = CMatrix::Identity(8, 8);
  for (std::uint64_t i = 4; i < 8; ++i)  // control set
    if (!(i & 2u)) expected(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = Cplx(-1, 0);
  CHECK((dense - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reflections are involutions") {
  RandomStream rng(23);
  const auto instance = make_dyadic_phase_instance(2, 1, 1, 3, 6);
  for (auto which : {Reflection::ZeroAncillas, Reflection::Accepting}) {
    QueryCounter counter;
    const auto original = random_state(3, rng);
    auto s = original;
    apply_reflection(s, which, instance.circuit, counter);
    apply_reflection(s, which, instance.circuit, counter);
    CHECK(max_abs_diff(s.amplitudes(), original.amplitudes()) < 1e-10);
  }
}

TEST_CASE("walk spectrum on a planted eighth phase") {
  const auto instance = make_dyadic_phase_instance(2, 1, 1, 3, 31);
  const auto decomp = jordan_decompose(instance.circuit);
  REQUIRE(decomp.planes.size() == 1);
  const auto& plane = decomp.planes[0];

  const double plus = walk_eigenphase(instance.circuit, plane_eigvec(plane, +1));
  const double minus = walk_eigenphase(instance.circuit, plane_eigvec(plane, -1));
  CHECK(std::abs(std::abs(plus) - 2.0 * pi() * 0.125) < 1e-9);
  CHECK(std::abs(std::abs(minus) - 2.0 * pi() * 0.125) < 1e-9);
  CHECK(plus == doctest::Approx(-minus).epsilon(1e-9));

  for (const auto& line : decomp.lines) {
    QueryCounter counter;
    auto moved = line.vec;
    apply_walk(moved, instance.circuit, counter);
    const CVector expected = static_cast<double>(line.walk_sign()) * line.vec.amplitudes();
    CHECK(max_abs_diff(moved.amplitudes(), expected) < 1e-10);
  }
}

TEST_CASE("walk restricted to every plane is the expected rotation") {
  RandomStream seeds(808);
  for (int trial = 0; trial < 8; ++trial) {
    const auto circuit = make_random_circuit(2, 2, 14, seeds.next_bits());
    const auto decomp = jordan_decompose(circuit);
    for (const auto& plane : decomp.planes) {
      QueryCounter counter;
      auto wv = plane.v;
      apply_walk(wv, circuit, counter);
      auto wvp = plane.v_perp;
      apply_walk(wvp, circuit, counter);

      Eigen::Matrix2cd restricted;
      restricted(0, 0) = plane.v.inner_product(wv);
      restricted(0, 1) = plane.v.inner_product(wvp);
      restricted(1, 0) = plane.v_perp.inner_product(wv);
      restricted(1, 1) = plane.v_perp.inner_product(wvp);

      // the plane is invariant: columns stay inside it
      CHECK(std::abs(restricted.col(0).squaredNorm() - 1.0) < 1e-9);
      CHECK(std::abs(restricted.col(1).squaredNorm() - 1.0) < 1e-9);

      Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(restricted);
      const double phase0 = std::abs(std::arg(solver.eigenvalues()(0)));
      const double phase1 = std::abs(std::arg(solver.eigenvalues()(1)));
      CHECK(std::abs(phase0 - 2.0 * pi() * plane.phi) < 1e-9);
      CHECK(std::abs(phase1 - 2.0 * pi() * plane.phi) < 1e-9);
    }
  }
}

TEST_CASE("precision plan arithmetic") {
  SUBCASE("reference point a = 0.9, b = 0.5") {
    const auto plan = plan_precision({0.9, 0.5, 6});
    CHECK(plan.phi_a == doctest::Approx(0.10241638234956672).epsilon(1e-9));
    CHECK(plan.phi_b == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(plan.delta_phi == doctest::Approx((plan.phi_b - plan.phi_a) / 2).epsilon(1e-15));
    CHECK(plan.n_bits == 3);
    CHECK(plan.t_bits == 7);
    CHECK(plan.walk_steps_per_round == 127);
    CHECK(plan.walk_steps_real_bound == doctest::Approx(130.04544872045034).epsilon(1e-9));
    CHECK(static_cast<double>(plan.walk_steps_per_round) <= plan.walk_steps_real_bound);
    CHECK(plan.total_walk_steps == 762);
    CHECK(plan.baseline_measurements == 75);
  }

  SUBCASE("a = 1 gives a zero phase") {
    const auto plan = plan_precision({1.0, 0.3, 2});
    CHECK(plan.phi_a == 0.0);
  }

  SUBCASE("taylor bound at the reference point") {
    const auto plan = plan_precision({0.9, 0.5, 6});
    CHECK(plan.taylor_gap_bound == doctest::Approx(0.0769).epsilon(1e-2));
    CHECK(plan.phi_b - plan.phi_a >= plan.taylor_gap_bound);
  }

  SUBCASE("taylor bound holds with nonnegative slack on the whole grid") {
    for (int ai = 1; ai <= 19; ++ai) {
      for (int bi = 0; bi < ai; ++bi) {
        const double a = 0.05 * ai, b = 0.05 * bi;
        const auto plan = plan_precision({a, b, 1});
        CHECK(plan.phi_b - plan.phi_a - plan.taylor_gap_bound >= 0.0);
        CHECK(static_cast<double>(plan.walk_steps_per_round) <= 4.0 * plan.walk_steps_real_bound);
      }
    }
  }

  SUBCASE("rejects bad inputs") {
    CHECK_THROWS_AS(plan_precision({0.5, 0.9, 1}), ValidationError);
    CHECK_THROWS_AS(plan_precision({0.9, 0.5, 1}, 0.5), ValidationError);
    CHECK_THROWS_AS(plan_precision({0.9, 0.5, 0}), ValidationError);
  }
}

TEST_CASE("phase folding") {
  CHECK(fold_phase(0.75) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(fold_phase(0.25) == 0.25);
  CHECK(fold_phase(0.5) == 0.5);
  CHECK_THROWS_AS(fold_phase(1.0), ValidationError);

  RandomStream rng(4);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform();
    if (x == 0.0) continue;
    CHECK(fold_phase(x) == doctest::Approx(fold_phase(1.0 - x)).epsilon(1e-12));
  }
}

TEST_CASE("median machinery") {
  CHECK(median_fail_bound(1.0 / 16.0, 6) ==
        doctest::Approx(3375.0 / 524288.0).epsilon(1e-15));
  CHECK(median_fail_bound(1.0 / 16.0, 0) == 0.5);
  for (int r = 1; r <= 12; ++r)
    CHECK(median_fail_bound(1.0 / 16.0, r) <= std::pow(2.0, -r) + 1e-15);
  CHECK_THROWS_AS(median_fail_bound(0.5, 3), ValidationError);

  CHECK(lower_median({0.3, 0.1, 0.2}) == 0.2);
  CHECK(lower_median({0.4, 0.1, 0.2, 0.3}) == 0.2);  // lower of the two middles
}

TEST_CASE("phase estimation on planted instances") {
  SUBCASE("exact quarter phase on the positive eigenvector reads 1 always") {
    const auto instance = make_dyadic_phase_instance(1, 1, 1, 2, 12);
    const auto decomp = jordan_decompose(instance.circuit);
    REQUIRE(decomp.planes.size() == 1);
    // pick the candidate carrying eigenvalue exp(+i pi/2)
    auto plus = plane_eigvec(decomp.planes[0], +1);
    if (walk_eigenphase(instance.circuit, plus) < 0.0)
      plus = plane_eigvec(decomp.planes[0], -1);

    RandomStream rng(9);
    for (int shot = 0; shot < 25; ++shot) {
      QueryCounter counter;
      auto state = plus;
      const auto sample = phase_estimate_round(state, instance.circuit, 2, rng, counter);
      CHECK(sample.raw_k == 1);
      CHECK(counter.v == 3);  // 2^t - 1 walk steps
    }
  }

  SUBCASE("witness splits evenly between the two eigenphases") {
    const auto instance = make_dyadic_phase_instance(1, 1, 1, 3, 44);
    RandomStream rng(10);
    int low = 0, high = 0;
    const int shots = 1000;
    for (int shot = 0; shot < shots; ++shot) {
      QueryCounter counter;
      auto state = append_zero_qubits(instance.top_witness, 1);
      const auto sample = phase_estimate_round(state, instance.circuit, 3, rng, counter);
      REQUIRE((sample.raw_k == 1 || sample.raw_k == 7));
      (sample.raw_k == 1 ? low : high) += 1;
      CHECK(sample.folded_phi == doctest::Approx(0.125).epsilon(1e-12));
    }
    CHECK(std::abs(low / static_cast<double>(shots) - 0.5) < 0.05);
  }

  SUBCASE("non-dyadic phase lands within 2^-n of the truth with high frequency") {
    const auto instance = make_rotation_instance(1, 1, 0.7, 3);
    const double true_phi = principal_angle(0.7);
    const auto plan = plan_precision({0.9, 0.5, 1});  // n = 3, t = 7
    RandomStream rng(11);
    int good = 0;
    const int shots = 1000;
    for (int shot = 0; shot < shots; ++shot) {
      QueryCounter counter;
      auto state = append_zero_qubits(instance.top_witness, 1);
      const auto sample = phase_estimate_round(state, instance.circuit, plan.t_bits, rng, counter);
      if (std::abs(sample.folded_phi - true_phi) <= std::pow(2.0, -plan.n_bits)) ++good;
    }
    CHECK(good / static_cast<double>(shots) >= 1.0 - plan.eps_pe);
  }
}

TEST_CASE("fast amplification") {
  SUBCASE("query accounting is exact") {
    const auto instance = make_dyadic_phase_instance(1, 1, 1, 3, 3);
    RandomStream rng(77);
    const PromiseParameters params{0.9, 0.5, 6};
    const auto decision = fast_amplify(instance.circuit, instance.top_witness, params, rng);
    CHECK(decision.queries_v == 762);
    CHECK(decision.queries_v_dag == 762);
    CHECK(decision.samples.size() == 6);
  }

  SUBCASE("exact dyadic yes case accepts deterministically") {
    const auto instance = make_dyadic_phase_instance(1, 1, 1, 3, 3);
    const PromiseParameters params{instance.known_pmax, 0.5, 6};
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      RandomStream rng(derive_seed(101, seed));
      const auto decision = fast_amplify(instance.circuit, instance.top_witness, params, rng);
      CHECK(decision.verdict == Verdict::Accept);
      CHECK(decision.median_folded == doctest::Approx(0.125).epsilon(1e-12));
    }
  }

  SUBCASE("the verifier register is carried between rounds") {
    // The first round collapses the witness onto one walk eigenvector; with
    // the register carried (not re-prepared) every later round must read the
    // same raw value. A fresh preparation each round would mix the two.
    const auto instance = make_dyadic_phase_instance(1, 1, 1, 3, 3);
    const PromiseParameters params{instance.known_pmax, 0.5, 8};
    int saw_low = 0, saw_high = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      RandomStream rng(derive_seed(202, seed));
      const auto decision = fast_amplify(instance.circuit, instance.top_witness, params, rng);
      for (const auto& sample : decision.samples)
        CHECK(sample.raw_k == decision.samples.front().raw_k);
      (decision.samples.front().folded_phi == decision.samples.front().raw_phi ? saw_low
                                                                               : saw_high) += 1;
    }
    CHECK(saw_low > 0);  // both eigenbranches show up across seeds
    CHECK(saw_high > 0);
  }

  SUBCASE("threshold comparison is strict") {
    // median exactly on the threshold must reject; exercised through the
    // decision rule on a handmade plan
    const auto plan = plan_precision({0.9, 0.5, 2});
    const double threshold = plan.accept_threshold();
    CHECK(!(threshold < threshold));  // documents the strict < convention
  }

  SUBCASE("memory guard surfaces as GuardError") {
    VerifierCircuit wide;
    wide.num_witness_qubits = 16;
    wide.num_ancilla_qubits = 4;
    wide.output_qubit = 16;
    const PromiseParameters params{0.9, 0.5, 1};
    RandomStream rng(1);
    const auto witness = StateVector<>::basis_state(16, 0);
    CHECK_THROWS_AS(fast_amplify(wide, witness, params, rng), GuardError);
  }
}
