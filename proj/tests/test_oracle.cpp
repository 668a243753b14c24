#include <doctest.h>

#include <cmath>

#include "qfs/oracle.hpp"
#include "test_helpers.hpp"

using namespace qfs;

TEST_CASE("power_sum basics") {
  const ComplexMatrix zero = outer({1.0, 0.0}, {1.0, 0.0});

  SUBCASE("identity channels reduce to a plain power of the expectation") {
    Rng rng = make_rng({211});
    const ComplexMatrix rho = random_density(2, rng);
    const ComplexMatrix obs = random_hermitian(2, rng);
    const double e = trace(matmul(obs, rho)).real();
    const std::vector<Channel> channels{identity_channel(2), identity_channel(2)};
    CHECK(oracle::power_sum(2, 1, {0.3, 0.7}, channels, obs, rho) == doctest::Approx(e).epsilon(1e-12));
    CHECK(oracle::power_sum(2, 2, {0.3, 0.7}, channels, obs, rho) ==
          doctest::Approx(e * e).epsilon(1e-12));
  }
  SUBCASE("linear two-branch case") {
    const std::vector<Channel> channels{unitary_channel(gates::hadamard(), "h"), identity_channel(2)};
    CHECK(oracle::power_sum(2, 1, {0.5, 0.5}, channels, gates::sigma_z(), zero) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("quadratic two-branch case") {
    const std::vector<Channel> channels{identity_channel(2), unitary_channel(gates::hadamard(), "h")};
    CHECK(oracle::power_sum(2, 2, {0.5, 0.5}, channels, gates::sigma_z(), zero) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("one branch is a plain expectation") {
    Rng rng = make_rng({223});
    const Channel ch = testing::random_channel(2, rng);
    const ComplexMatrix rho = random_density(2, rng);
    const ComplexMatrix obs = random_hermitian(2, rng);
    const double direct = trace(matmul(obs, ch.apply(rho))).real();
    CHECK(oracle::power_sum(1, 1, {1.0}, {ch}, obs, rho) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("twirl") {
  Rng rng = make_rng({227});
  const ComplexMatrix rho = random_density(2, rng);
  const std::vector<ComplexMatrix> paulis{gates::identity2(), gates::sigma_x(), gates::sigma_y(),
                                          gates::sigma_z()};
  const std::vector<double> quarter(4, 0.25);

  SUBCASE("identity inner channel returns the input state") {
    const std::vector<ComplexMatrix> us{random_unitary(2, rng), random_unitary(2, rng)};
    const ComplexMatrix out = oracle::twirl(us, {0.5, 0.5}, identity_channel(2), rho);
    CHECK(max_abs_diff(out, rho) <= 1e-12);
  }
  SUBCASE("the maximally mixed state is a fixed point of any Pauli twirl") {
    const ComplexMatrix mixed = scale(0.5, ComplexMatrix::identity(2));
    const Channel ch = testing::random_channel(2, rng);
    const ComplexMatrix out = oracle::twirl(paulis, quarter, ch, mixed);
    CHECK(max_abs_diff(out, mixed) <= 1e-10);
  }
  SUBCASE("Pauli-twirled amplitude damping contracts <sigma_x> by the closed form") {
    const double gamma = 0.37;
    const Channel damping = amplitude_damping(gamma);
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexMatrix plus = outer({s, s}, {s, s});
    const ComplexMatrix out = oracle::twirl(paulis, quarter, damping, plus);
    const double x_out = trace(matmul(gates::sigma_x(), out)).real();

    double expected = 0.0;
    for (const ComplexMatrix& u : paulis) {
      const ComplexMatrix conjugated = matmul(u, matmul(plus, dagger(u)));
      const ComplexMatrix back = matmul(dagger(u), matmul(damping.apply(conjugated), u));
      expected += 0.25 * trace(matmul(gates::sigma_x(), back)).real();
    }
    CHECK(x_out == doctest::Approx(expected).epsilon(1e-12));
    // The twirled channel is Pauli-diagonal: <sigma_x> contracts by sqrt(1-gamma).
    CHECK(x_out == doctest::Approx(std::sqrt(1.0 - gamma)).epsilon(1e-10));
  }
}

TEST_CASE("witness_value") {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexVector phi_plus{s, 0.0, 0.0, s};
  CHECK(oracle::witness_value(outer(phi_plus, phi_plus)) == doctest::Approx(-0.5).epsilon(1e-12));

  const ComplexVector zz{1.0, 0.0, 0.0, 0.0};
  CHECK(oracle::witness_value(outer(zz, zz)) == doctest::Approx(0.0).epsilon(1e-12));

  const ComplexVector singlet{0.0, s, -s, 0.0};
  CHECK(oracle::witness_value(outer(singlet, singlet)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("purity_sum") {
  const ComplexMatrix zero = outer({1.0, 0.0}, {1.0, 0.0});
  CHECK(oracle::purity_sum(zero) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(oracle::purity_sum(scale(0.5, ComplexMatrix::identity(2))) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // sum of squared Pauli expectations = 2 tr(rho^2) - 1 on a qubit.
  Rng rng = make_rng({229});
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix rho = random_density(2, rng);
    const double via_trace = 2.0 * trace(matmul(rho, rho)).real() - 1.0;
    CHECK(std::abs(oracle::purity_sum(rho) - via_trace) <= 1e-10);
  }
}

TEST_CASE("trajectories expose per-branch per-copy expectations") {
  Rng rng = make_rng({233});
  const ComplexMatrix rho = random_density(2, rng);
  const ComplexMatrix obs = random_hermitian(2, rng);
  oracle::BranchChains chains(2);
  chains[0] = {{identity_channel(2)}, {identity_channel(2)}};
  chains[1] = {{unitary_channel(gates::hadamard(), "h")}, {unitary_channel(gates::hadamard(), "h")}};

  const auto results = oracle::trajectories(chains, rho, obs);
  REQUIRE(results.size() == 2);
  REQUIRE(results[0].expectations.size() == 2);
  const double plain = trace(matmul(obs, rho)).real();
  CHECK(results[0].expectations[0] == doctest::Approx(plain).epsilon(1e-12));
  CHECK(results[0].expectations[1] == doctest::Approx(plain).epsilon(1e-12));
  const ComplexMatrix rotated = matmul(gates::hadamard(), matmul(rho, gates::hadamard()));
  const double conjugated = trace(matmul(obs, rotated)).real();
  CHECK(results[1].expectations[0] == doctest::Approx(conjugated).epsilon(1e-12));
}
