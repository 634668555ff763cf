#include <cmath>

#include "doctest.h"
#include "qamp/planted.hpp"
#include "qamp/qft.hpp"
#include "test_util.hpp"

using namespace qamp;
using qamp::testing::dft_matrix;
using qamp::testing::max_abs_diff;

namespace {

std::vector<Gate<>> random_gates(int num_qubits, int count, std::uint64_t seed) {
  if (num_qubits >= 2) return make_random_circuit(num_qubits - 1, 1, count, seed).gates;
  RandomStream rng(seed);
  static constexpr GateKind kinds[] = {GateKind::H,     GateKind::X,    GateKind::Y,
                                       GateKind::Z,     GateKind::S,    GateKind::T,
                                       GateKind::Phase, GateKind::RotX, GateKind::RotY,
                                       GateKind::RotZ};
  std::vector<Gate<>> gates;
  for (int i = 0; i < count; ++i)
    gates.push_back(make_gate(kinds[rng.uniform_int(std::size(kinds))], {0}, {},
                              2.0 * pi() * rng.uniform()));
  return gates;
}

}  // namespace

TEST_CASE("named single-qubit gates") {
  auto s = StateVector<>(1);
  apply_gate(s, make_gate(GateKind::X, {0}));
  CHECK(std::abs(s.amp(1) - Cplx(1, 0)) < 1e-15);

  s = StateVector<>(1);
  apply_gate(s, make_gate(GateKind::H, {0}));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.amp(0) - Cplx(inv_sqrt2, 0)) < 1e-15);
  CHECK(std::abs(s.amp(1) - Cplx(inv_sqrt2, 0)) < 1e-15);
}

TEST_CASE("named gate truth table") {
  const double c = std::cos(0.4), s = std::sin(0.4);

  auto y = StateVector<>(1);
  apply_gate(y, make_gate(GateKind::Y, {0}));
  CHECK(std::abs(y.amp(1) - Cplx(0, 1)) < 1e-15);

  auto sg = StateVector<>::basis_state(1, 1);
  apply_gate(sg, make_gate(GateKind::S, {0}));
  CHECK(std::abs(sg.amp(1) - Cplx(0, 1)) < 1e-15);

  auto t = StateVector<>::basis_state(1, 1);
  apply_gate(t, make_gate(GateKind::T, {0}));
  CHECK(std::abs(t.amp(1) - std::polar(1.0, pi() / 4)) < 1e-15);

  auto cz = StateVector<>::basis_state(2, 3);
  apply_gate(cz, make_gate(GateKind::CZ, {0, 1}));
  CHECK(std::abs(cz.amp(3) - Cplx(-1, 0)) < 1e-15);
  cz = StateVector<>::basis_state(2, 1);
  apply_gate(cz, make_gate(GateKind::CZ, {0, 1}));
  CHECK(std::abs(cz.amp(1) - Cplx(1, 0)) < 1e-15);

  auto swap = StateVector<>::basis_state(2, 1);
  apply_gate(swap, make_gate(GateKind::Swap, {0, 1}));
  CHECK(std::abs(swap.amp(2) - Cplx(1, 0)) < 1e-15);

  auto ry = StateVector<>(1);
  apply_gate(ry, make_gate(GateKind::RotY, {0}, {}, 0.8));
  CHECK(std::abs(ry.amp(0) - Cplx(c, 0)) < 1e-15);
  CHECK(std::abs(ry.amp(1) - Cplx(s, 0)) < 1e-15);

  auto rx = StateVector<>(1);
  apply_gate(rx, make_gate(GateKind::RotX, {0}, {}, 0.8));
  CHECK(std::abs(rx.amp(0) - Cplx(c, 0)) < 1e-15);
  CHECK(std::abs(rx.amp(1) - Cplx(0, -s)) < 1e-15);

  auto rz = StateVector<>::basis_state(1, 1);
  apply_gate(rz, make_gate(GateKind::RotZ, {0}, {}, 0.8));
  CHECK(std::abs(rz.amp(1) - std::polar(1.0, 0.4)) < 1e-15);

  CHECK_THROWS_AS(StateVector<>(25), GuardError);
}

TEST_CASE("controlled minus-Z keeps the scalar prefactor as a relative phase") {
  CMatrix minus_z(2, 2);
  minus_z << Cplx(-1, 0), Cplx(0, 0), Cplx(0, 0), Cplx(1, 0);
  const auto gate = make_unitary_gate(minus_z, {0}, {1});

  // |10> means qubit 1 (control) set, qubit 0 (target) clear: basis index 2.
  auto s = StateVector<>::basis_state(2, 2);
  apply_gate(s, gate);
  CHECK(std::abs(s.amp(2) - Cplx(-1, 0)) < 1e-15);

  // Dense block form diag(I, -Z) in the control bit, exactly.
  const auto dense = dense_unitary<double>({gate}, 2);
  CMatrix expected = CMatrix::Identity(4, 4);
  expected(2, 2) = Cplx(-1, 0);
  expected(3, 3) = Cplx(1, 0);
  CHECK((dense - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("explicit non-unitary matrices are rejected") {
  CMatrix bad(2, 2);
  bad << Cplx(1, 0), Cplx(0, 0), Cplx(0, 0), Cplx(2, 0);
  CHECK_THROWS_AS(make_unitary_gate(bad, {0}), ValidationError);
}

TEST_CASE("out-of-range and overlapping wires are rejected") {
  auto s = StateVector<>(2);
  CHECK_THROWS_AS(apply_gate(s, make_gate(GateKind::X, {2})), ValidationError);
  CHECK_THROWS_AS(apply_gate(s, make_gate(GateKind::X, {0}, {0})), ValidationError);
  CHECK_THROWS_AS(apply_gate(s, make_gate(GateKind::CX, {1, 1})), ValidationError);
}

TEST_CASE("H twice is the identity") {
  auto s = StateVector<>(1);
  const std::vector<Gate<>> gates = {make_gate(GateKind::H, {0}), make_gate(GateKind::H, {0})};
  apply_circuit(s, gates);
  CHECK(std::abs(s.amp(0) - Cplx(1, 0)) < 1e-12);
}

TEST_CASE("forced output bit") {
  RandomStream rng(5);
  auto s = tensor_high(random_state(1, rng), StateVector<>(1));
  apply_circuit(s, std::vector<Gate<>>{make_gate(GateKind::X, {1})});
  double p_out1 = 0.0;
  for (std::uint64_t i = 0; i < s.dimension(); ++i)
    if (i & 2u) p_out1 += std::norm(s.amp(i));
  CHECK(p_out1 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("forward then inverse is the identity and norms are preserved") {
  RandomStream rng(99);
  double worst_diff = 0.0;
  double worst_norm_drift = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int q = 1 + static_cast<int>(rng.uniform_int(8));
    const auto gates = random_gates(q, 12, rng.next_bits());
    const auto original = random_state(q, rng);
    auto s = original;
    apply_circuit(s, gates, Direction::Forward);
    worst_norm_drift = std::max(worst_norm_drift, std::abs(s.squared_norm() - 1.0));
    apply_circuit(s, gates, Direction::Inverse);
    worst_norm_drift = std::max(worst_norm_drift, std::abs(s.squared_norm() - 1.0));
    worst_diff = std::max(worst_diff, max_abs_diff(s.amplitudes(), original.amplitudes()));
  }
  CHECK(worst_diff <= 1e-10);
  CHECK(worst_norm_drift <= 1e-9);
}

TEST_CASE("gate-by-gate application matches the dense unitary") {
  RandomStream rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    const int q = 2 + static_cast<int>(rng.uniform_int(5));  // up to 6 qubits
    const auto gates = random_gates(q, 15, rng.next_bits());
    const auto dense = dense_unitary(gates, q);
    CHECK((dense.adjoint() * dense - CMatrix::Identity(dense.rows(), dense.cols()))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    const auto s0 = random_state(q, rng);
    auto s = s0;
    apply_circuit(s, gates);
    const CVector via_dense = dense * s0.amplitudes();
    CHECK(max_abs_diff(s.amplitudes(), via_dense) < 1e-10);
  }
}

TEST_CASE("dense unitary basics") {
  const auto identity = dense_unitary<double>({}, 2);
  CHECK((identity - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  const auto h = dense_unitary<double>({make_gate(GateKind::H, {0})}, 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(h(0, 0) - Cplx(inv_sqrt2, 0)) < 1e-15);
  CHECK(std::abs(h(1, 1) - Cplx(-inv_sqrt2, 0)) < 1e-15);

  CHECK_THROWS_AS(dense_unitary<double>({}, 11), GuardError);
}

TEST_CASE("measurement: deterministic, Born statistics, forced collapse") {
  RandomStream rng(7);
  const std::vector<int> wire0 = {0};

  auto one = StateVector<>::basis_state(1, 1);
  CHECK(measure_register(one, wire0, rng) == 1);

  int ones = 0;
  const int shots = 10000;
  for (int i = 0; i < shots; ++i) {
    auto s = StateVector<>(1);
    apply_gate(s, make_gate(GateKind::H, {0}));
    ones += static_cast<int>(measure_register(s, wire0, rng));
  }
  CHECK(std::abs(ones / static_cast<double>(shots) - 0.5) < 0.02);

  // Bell pair: measuring qubit 0 as 1 forces |11>.
  bool saw_one = false;
  for (int i = 0; i < 64 && !saw_one; ++i) {
    auto bell = StateVector<>(2);
    apply_gate(bell, make_gate(GateKind::H, {0}));
    apply_gate(bell, make_gate(GateKind::CX, {0, 1}));
    if (measure_register(bell, wire0, rng) == 1) {
      saw_one = true;
      CHECK(std::abs(bell.amp(3) - Cplx(1, 0)) < 1e-12);
      CHECK(std::abs(bell.amp(0)) < 1e-12);
    }
  }
  CHECK(saw_one);
}

TEST_CASE("inverse Fourier transform") {
  SUBCASE("single qubit reduces to a Hadamard") {
    auto s = StateVector<>::basis_state(1, 1);
    apply_inverse_qft(s, std::vector<int>{0});
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s.amp(0) - Cplx(inv_sqrt2, 0)) < 1e-12);
    CHECK(std::abs(s.amp(1) - Cplx(-inv_sqrt2, 0)) < 1e-12);
  }

  SUBCASE("uniform superposition maps to the zero state") {
    const int t = 4;
    auto s = StateVector<>(t);
    std::vector<int> wires;
    for (int k = 0; k < t; ++k) {
      apply_gate(s, make_gate(GateKind::H, {k}));
      wires.push_back(k);
    }
    apply_inverse_qft(s, wires);
    CHECK(std::abs(s.amp(0) - Cplx(1, 0)) < 1e-10);
  }

  SUBCASE("phase-grid states map to basis states, against the dense oracle") {
    for (int t = 1; t <= 4; ++t) {
      const std::uint64_t dim = dim_of(t);
      const CMatrix idft = dft_matrix(t).adjoint();
      std::vector<int> wires;
      for (int k = 0; k < t; ++k) wires.push_back(k);
      for (std::uint64_t j = 0; j < dim; ++j) {
        CVector amps(static_cast<Eigen::Index>(dim));
        for (std::uint64_t k = 0; k < dim; ++k)
          amps(static_cast<Eigen::Index>(k)) = std::polar(
              1.0 / std::sqrt(static_cast<double>(dim)),
              2.0 * pi() * static_cast<double>(j * k % dim) / static_cast<double>(dim));
        auto s = StateVector<>::from_amplitudes(t, amps);
        const CVector expected = idft * amps;
        apply_inverse_qft(s, wires);
        CHECK(max_abs_diff(s.amplitudes(), expected) < 1e-10);
        CHECK(std::norm(s.amp(j)) == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }

  SUBCASE("forward transform inverts the inverse") {
    RandomStream rng(31);
    const int t = 5;
    const std::vector<int> wires = {0, 1, 2, 3, 4};
    const auto original = random_state(t, rng);
    auto s = original;
    apply_qft(s, wires);
    apply_inverse_qft(s, wires);
    CHECK(max_abs_diff(s.amplitudes(), original.amplitudes()) < 1e-10);
  }

  SUBCASE("register wire listed twice is rejected") {
    auto s = StateVector<>(2);
    CHECK_THROWS_AS(apply_inverse_qft(s, std::vector<int>{0, 0}), ValidationError);
  }
}

TEST_CASE("multi-qubit register measurement follows the Born rule") {
  RandomStream rng(271);
  const auto reference = random_state(3, rng);
  const std::vector<int> reg = {0, 2};

  // analytic marginals over (qubit0, qubit2)
  double expected[4] = {0, 0, 0, 0};
  for (std::uint64_t i = 0; i < 8; ++i)
    expected[(i & 1u) | ((i >> 1) & 2u)] += std::norm(reference.amp(i));

  const int shots = 4000;
  int counts[4] = {0, 0, 0, 0};
  for (int s = 0; s < shots; ++s) {
    auto copy = reference;
    const auto outcome = measure_register(copy, reg, rng);
    counts[outcome] += 1;
    CHECK(std::abs(copy.squared_norm() - 1.0) < 1e-9);
    // collapsed support matches the outcome
    for (std::uint64_t i = 0; i < 8; ++i) {
      const std::uint64_t bits = (i & 1u) | ((i >> 1) & 2u);
      if (bits != outcome) CHECK(std::abs(copy.amp(i)) == 0.0);
    }
  }
  for (int o = 0; o < 4; ++o) {
    const double sigma = std::sqrt(expected[o] * (1 - expected[o]) / shots);
    CHECK(std::abs(counts[o] / static_cast<double>(shots) - expected[o]) < 4.0 * sigma + 1e-3);
  }
}

TEST_CASE("register helpers") {
  RandomStream rng(17);
  const auto low = random_state(2, rng);
  const auto lifted = append_zero_qubits(low, 2);
  CHECK(lifted.num_qubits() == 4);
  CHECK(max_abs_diff(lifted.amplitudes().head(4), low.amplitudes()) == 0.0);
  const auto back = extract_lower_qubits(lifted, 2, 0);
  CHECK(max_abs_diff(back.amplitudes(), low.amplitudes()) == 0.0);

  const auto high = random_state(1, rng);
  const auto joint = tensor_high(low, high);
  CHECK(std::abs(joint.amp(5) - high.amp(1) * low.amp(1)) < 1e-15);
}
