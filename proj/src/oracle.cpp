#include "qfs/oracle.hpp"

#include <cmath>

#include "qfs/errors.hpp"
#include "qfs/gates.hpp"

namespace qfs::oracle {

namespace {

ComplexMatrix push_through(const std::vector<Channel>& chain, ComplexMatrix rho) {
  for (const Channel& ch : chain) rho = ch.apply(rho);
  return rho;
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // tr(a b) without forming the product matrix.
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc += a(i, j) * b(j, i);
    }
  }
  return acc.real();
}

}  // namespace

std::vector<TrajectoryResult> trajectories(const BranchChains& chains, const ComplexMatrix& rho_target,
                                           const ComplexMatrix& per_copy_obs) {
  std::vector<TrajectoryResult> out;
  out.reserve(chains.size());
  for (std::size_t branch = 0; branch < chains.size(); ++branch) {
    TrajectoryResult tr;
    tr.branch = branch;
    for (const auto& chain : chains[branch]) {
      const ComplexMatrix sigma = push_through(chain, rho_target);
      tr.expectations.push_back(real_trace_product(per_copy_obs, sigma));
    }
    out.push_back(std::move(tr));
  }
  return out;
}

double power_sum(std::size_t d, std::size_t q, const std::vector<double>& weights,
                 const std::vector<Channel>& channels, const ComplexMatrix& obs,
                 const ComplexMatrix& rho_target) {
  if (weights.size() != d || channels.size() != d) {
    throw validation_error("oracle power_sum: expected one weight and one channel per branch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const ComplexMatrix sigma = channels[i].apply(rho_target);
    const double e = real_trace_product(obs, sigma);
    total += weights[i] * std::pow(e, static_cast<double>(q));
  }
  return total;
}

double general_expectation(const std::vector<double>& weights, const BranchChains& chains,
                           const ComplexMatrix& obs_joint, const ComplexMatrix& rho_target) {
  if (weights.size() != chains.size()) {
    throw validation_error("oracle general_expectation: weights/chains size mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    ComplexMatrix joint = ComplexMatrix::identity(1);
    for (const auto& chain : chains[i]) {
      joint = kron(joint, push_through(chain, rho_target));
    }
    total += weights[i] * real_trace_product(obs_joint, joint);
  }
  return total;
}

double general_projective(const std::vector<double>& weights, const BranchChains& chains,
                          const std::vector<ComplexMatrix>& per_copy_projectors,
                          const ComplexMatrix& rho_target) {
  if (weights.size() != chains.size()) {
    throw validation_error("oracle general_projective: weights/chains size mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].size() != per_copy_projectors.size()) {
      throw validation_error("oracle general_projective: one projector per copy required");
    }
    double product = 1.0;
    for (std::size_t j = 0; j < chains[i].size(); ++j) {
      const ComplexMatrix sigma = push_through(chains[i][j], rho_target);
      product *= real_trace_product(per_copy_projectors[j], sigma);
    }
    total += weights[i] * product;
  }
  return total;
}

ComplexMatrix twirl(const std::vector<ComplexMatrix>& twirl_set, const std::vector<double>& weights,
                    const Channel& inner, const ComplexMatrix& rho_target) {
  if (twirl_set.empty() || twirl_set.size() != weights.size()) {
    throw validation_error("oracle twirl: weights/unitaries size mismatch");
  }
  ComplexMatrix out(rho_target.rows(), rho_target.cols());
  for (std::size_t i = 0; i < twirl_set.size(); ++i) {
    const ComplexMatrix& u = twirl_set[i];
    const ComplexMatrix conjugated = matmul(u, matmul(rho_target, dagger(u)));
    const ComplexMatrix mapped = inner.apply(conjugated);
    const ComplexMatrix back = matmul(dagger(u), matmul(mapped, u));
    out = add(out, scale(weights[i], back));
  }
  return out;
}

double witness_value(const ComplexMatrix& rho_two_qubit) {
  if (rho_two_qubit.rows() != 4 || !rho_two_qubit.is_square()) {
    throw validation_error("oracle witness: expected a two-qubit state");
  }
  const ComplexMatrix w =
      scale(0.25, subtract(add(kron(gates::identity2(), gates::identity2()),
                               kron(gates::sigma_y(), gates::sigma_y())),
                           add(kron(gates::sigma_x(), gates::sigma_x()),
                               kron(gates::sigma_z(), gates::sigma_z()))));
  return real_trace_product(w, rho_two_qubit);
}

double purity_sum(const ComplexMatrix& rho_qubit) {
  if (rho_qubit.rows() != 2 || !rho_qubit.is_square()) {
    throw validation_error("oracle purity: expected a single-qubit state");
  }
  double total = 0.0;
  for (char axis : {'x', 'y', 'z'}) {
    const double e = real_trace_product(gates::pauli(axis), rho_qubit);
    total += e * e;
  }
  return total;
}

}  // namespace qfs::oracle
