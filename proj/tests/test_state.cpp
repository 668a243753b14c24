#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qfs/config.hpp"
#include "qfs/errors.hpp"
#include "qfs/state.hpp"
#include "test_helpers.hpp"

using namespace qfs;

TEST_CASE("embed places an operator on the requested subsystems") {
  const RegisterLayout three = RegisterLayout::plain({2, 2, 2});

  SUBCASE("middle qubit") {
    const ComplexMatrix expected = kron(gates::identity2(), kron(gates::sigma_z(), gates::identity2()));
    CHECK(max_abs_diff(embed(gates::sigma_z(), three, {1}), expected) == 0.0);
  }
  SUBCASE("swap is symmetric under target order") {
    const RegisterLayout two = RegisterLayout::plain({2, 2});
    const ComplexMatrix swap = gates::swap_slots(2);
    CHECK(max_abs_diff(embed(swap, two, {1, 0}), swap) == 0.0);
  }
  SUBCASE("permuted non-adjacent targets") {
    // sigma_x on subsystem 2, sigma_z on subsystem 0, applied to |000>.
    const ComplexMatrix op = kron(gates::sigma_x(), gates::sigma_z());
    const ComplexMatrix full = embed(op, three, {2, 0});
    ComplexVector zero(8, Complex{0.0, 0.0});
    zero[0] = 1.0;
    const ComplexVector out = matvec(full, zero);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(out[i] == (i == 1 ? Complex{1.0, 0.0} : Complex{0.0, 0.0}));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(embed(gates::sigma_z(), three, {3}), validation_error);
    CHECK_THROWS_AS(embed(gates::sigma_z(), three, {0, 0}), validation_error);
    CHECK_THROWS_AS(embed(ComplexMatrix::identity(4), three, {0}), validation_error);
  }
}

TEST_CASE("apply_unitary on pure states") {
  const QuantumState zero = testing::qubit_zero();
  const QuantumState plus = zero.apply_unitary(gates::hadamard(), {0});
  CHECK(plus.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(plus.amplitudes()[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  const QuantumState back = zero.apply_unitary(gates::sigma_x(), {0}).apply_unitary(gates::sigma_x(), {0});
  CHECK(std::abs(back.amplitudes()[0] - Complex{1.0, 0.0}) <= 1e-12);

  const QuantumState rotated = zero.apply_unitary(gates::ry(std::numbers::pi / 2.0), {0});
  CHECK(rotated.amplitudes()[0].real() == doctest::Approx(std::cos(std::numbers::pi / 4.0)).epsilon(1e-12));
  CHECK(rotated.amplitudes()[1].real() == doctest::Approx(std::sin(std::numbers::pi / 4.0)).epsilon(1e-12));

  ComplexMatrix skewed = gates::hadamard();
  skewed(1, 0) += 0.05;
  CHECK_THROWS_AS(zero.apply_unitary(skewed, {0}), validation_error);
}

TEST_CASE("apply_unitary equals the embedded-operator definition") {
  Rng rng = make_rng({61});
  const RegisterLayout layout = RegisterLayout::plain({2, 4, 2});
  const QuantumState state = QuantumState::pure(layout, random_pure(16, rng));
  const ComplexMatrix u = random_unitary(8, rng);  // acts on subsystems {2, 1}

  const QuantumState fast = state.apply_unitary(u, {2, 1});
  const ComplexVector direct = matvec(embed(u, layout, {2, 1}), state.amplitudes());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(std::abs(fast.amplitudes()[i] - direct[i]) <= 1e-12);
  }

  // Density route agrees too.
  const QuantumState dense = state.to_density().apply_unitary(u, {2, 1});
  const ComplexMatrix expected = outer(direct, direct);
  CHECK(max_abs_diff(dense.density_matrix(), expected) <= 1e-12);
}

TEST_CASE("apply_unitary preserves norm and trace") {
  Rng rng = make_rng({67});
  const RegisterLayout layout = RegisterLayout::plain({2, 2, 2});
  const QuantumState pure = QuantumState::pure(layout, random_pure(8, rng));
  const ComplexMatrix u = random_unitary(4, rng);
  CHECK(std::abs(norm2(pure.apply_unitary(u, {0, 2}).amplitudes()) - 1.0) <= 1e-10);

  const QuantumState dense = QuantumState::density(RegisterLayout::plain({2, 2}), random_density(4, rng));
  const Complex t = trace(dense.apply_unitary(u, {0, 1}).density_matrix());
  CHECK(std::abs(t - Complex{1.0, 0.0}) <= 1e-10);
}

TEST_CASE("apply_channel") {
  Rng rng = make_rng({71});

  SUBCASE("identity channel leaves the state alone") {
    const QuantumState s = QuantumState::density(RegisterLayout::single(2), random_density(2, rng));
    CHECK(max_abs_diff(s.apply_channel(identity_channel(2), {0}).density_matrix(), s.density_matrix()) <=
          1e-12);
  }
  SUBCASE("full dephasing flattens |+>") {
    const QuantumState out = testing::qubit_plus().apply_channel(dephasing(1.0), {0});
    CHECK(out.is_density());
    CHECK(max_abs_diff(out.density_matrix(), scale(0.5, ComplexMatrix::identity(2))) <= 1e-12);
  }
  SUBCASE("full depolarizing gives the maximally mixed state") {
    const QuantumState s = QuantumState::density(RegisterLayout::single(2), random_density(2, rng));
    const QuantumState out = s.apply_channel(depolarizing(1.0), {0});
    CHECK(max_abs_diff(out.density_matrix(), scale(0.5, ComplexMatrix::identity(2))) <= 1e-12);
  }
  SUBCASE("unitary channel equals apply_unitary on the density form") {
    const RegisterLayout layout = RegisterLayout::plain({2, 2});
    const QuantumState s = QuantumState::density(layout, random_density(4, rng));
    const ComplexMatrix u = random_unitary(2, rng);
    const QuantumState via_channel = s.apply_channel(unitary_channel(u), {1});
    const QuantumState via_unitary = s.apply_unitary(u, {1});
    CHECK(max_abs_diff(via_channel.density_matrix(), via_unitary.density_matrix()) <= 1e-12);
  }
  SUBCASE("preserves trace, Hermiticity and positivity") {
    const RegisterLayout layout = RegisterLayout::plain({2, 2});
    for (int trial = 0; trial < 10; ++trial) {
      const QuantumState s = QuantumState::density(layout, random_density(4, rng));
      const Channel ch = testing::random_channel(2, rng);
      const ComplexMatrix out = s.apply_channel(ch, {trial % 2 == 0 ? 0u : 1u}).density_matrix();
      CHECK(std::abs(trace(out) - Complex{1.0, 0.0}) <= 1e-10);
      CHECK(is_hermitian(out, 1e-10));
      CHECK(hermitian_eig(out).eigenvalues.front() >= -1e-9);
    }
  }
  SUBCASE("matches the embedded Kraus definition on a bigger register") {
    const RegisterLayout layout = RegisterLayout::plain({2, 2, 2});
    const QuantumState s = QuantumState::density(layout, random_density(8, rng));
    const Channel ch = Channel(random_kraus_set(2, 3, rng));
    const ComplexMatrix fast = s.apply_channel(ch, {1}).density_matrix();
    ComplexMatrix direct(8, 8);
    for (const ComplexMatrix& k : ch.kraus_ops()) {
      const ComplexMatrix ke = embed(k, layout, {1});
      direct = add(direct, matmul(ke, matmul(s.density_matrix(), dagger(ke))));
    }
    CHECK(max_abs_diff(fast, direct) <= 1e-11);
  }
}

TEST_CASE("expectation values") {
  const QuantumState zero = testing::qubit_zero();
  CHECK(zero.expectation({gates::sigma_z(), {0}}) == doctest::Approx(1.0).epsilon(1e-12));

  // <ZZ> on the maximally entangled pair.
  const double s = 1.0 / std::sqrt(2.0);
  const QuantumState bell = QuantumState::pure(RegisterLayout::plain({2, 2}), {s, 0.0, 0.0, s});
  CHECK(bell.expectation({kron(gates::sigma_z(), gates::sigma_z()), {0, 1}}) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // <sigma_x> of R_y(theta)|0> is sin(theta).
  const double theta = std::numbers::pi / 3.0;
  const QuantumState rotated = zero.apply_unitary(gates::ry(theta), {0});
  CHECK(rotated.expectation({gates::sigma_x(), {0}}) ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

  // Identity observable reads 1 on any state.
  Rng rng = make_rng({73});
  const QuantumState mixed = QuantumState::density(RegisterLayout::plain({2, 2}), random_density(4, rng));
  CHECK(mixed.expectation({ComplexMatrix::identity(2), {1}}) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(zero.expectation({random_gaussian_matrix(2, 2, rng), {0}}), validation_error);
}

TEST_CASE("projective probabilities") {
  const QuantumState zero = testing::qubit_zero();
  const ComplexMatrix p0 = outer({1.0, 0.0}, {1.0, 0.0});
  const ComplexMatrix p1 = outer({0.0, 1.0}, {0.0, 1.0});
  CHECK(zero.projective_probability({p0, {0}}) == doctest::Approx(1.0).epsilon(1e-12));

  const QuantumState plus = zero.apply_unitary(gates::hadamard(), {0});
  CHECK(plus.projective_probability({p1, {0}}) == doctest::Approx(0.5).epsilon(1e-12));

  const double s = 1.0 / std::sqrt(2.0);
  const ComplexVector bell{s, 0.0, 0.0, s};
  const QuantumState product = QuantumState::basis(RegisterLayout::plain({2, 2}), 0);
  CHECK(product.projective_probability({outer(bell, bell), {0, 1}}) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(zero.projective_probability({scale(0.5, p0), {0}}), validation_error);
}

TEST_CASE("born_sample") {
  const QuantumState zero = testing::qubit_zero();
  const Observable z{gates::sigma_z(), {0}};

  SUBCASE("eigenstate input gives a constant stream") {
    for (double o : zero.born_sample(z, 100, 5)) CHECK(o == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("empirical mean of a fair coin is within 5 sigma") {
    const QuantumState plus = zero.apply_unitary(gates::hadamard(), {0});
    const std::size_t shots = 100000;
    const auto outcomes = plus.born_sample(z, shots, 99);
    double mean = 0.0;
    for (double o : outcomes) mean += o;
    mean /= static_cast<double>(shots);
    CHECK(std::abs(mean) <= 5.0 / std::sqrt(static_cast<double>(shots)));
  }
  SUBCASE("fixed seed reproduces the exact sequence") {
    const QuantumState plus = zero.apply_unitary(gates::hadamard(), {0});
    const auto a = plus.born_sample(z, 500, 1234);
    const auto b = plus.born_sample(z, 500, 1234);
    CHECK(a == b);
  }
  SUBCASE("shots must be positive") {
    CHECK_THROWS_AS(zero.born_sample(z, 0, 1), validation_error);
  }
}

TEST_CASE("state validation") {
  const RegisterLayout qubit = RegisterLayout::single(2);
  CHECK_THROWS_AS(QuantumState::pure(qubit, {0.5, 0.5}), validation_error);
  CHECK_THROWS_AS(QuantumState::density(qubit, scale(2.0, ComplexMatrix::identity(2))), validation_error);
  const ComplexMatrix negative =
      ComplexMatrix::from_rows({{Complex{1.5, 0.0}, 0.0}, {0.0, Complex{-0.5, 0.0}}});
  CHECK_THROWS_AS(QuantumState::density(qubit, negative), validation_error);
}

TEST_CASE("dimension caps are enforced") {
  ScopedCaps guard(8, 4);
  CHECK_THROWS_AS(QuantumState::basis(RegisterLayout::plain({2, 2, 2, 2}), 0), dimension_error);
  const QuantumState big_pure = QuantumState::basis(RegisterLayout::plain({2, 2, 2}), 0);
  CHECK_THROWS_AS(big_pure.to_density(), dimension_error);
  CHECK_THROWS_AS(embed(gates::sigma_z(), RegisterLayout::plain({2, 2, 2}), {0}), dimension_error);
  // Pure cap binds basis states even when the layout itself is admissible.
  ScopedCaps tight(4, 8);
  CHECK_THROWS_AS(QuantumState::basis(RegisterLayout::plain({2, 2, 2}), 0), dimension_error);
}

TEST_CASE("reduced density of a product state") {
  Rng rng = make_rng({79});
  const QuantumState a = QuantumState::density(RegisterLayout::single(2), random_density(2, rng));
  const QuantumState b = QuantumState::density(RegisterLayout::single(4), random_density(4, rng));
  const QuantumState joint = tensor(a, b);
  CHECK(max_abs_diff(joint.reduced_density({0}), a.density_matrix()) <= 1e-10);
  CHECK(max_abs_diff(joint.reduced_density({1}), b.density_matrix()) <= 1e-10);
}
