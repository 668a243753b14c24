#pragma once

#include <string>
#include <vector>

#include "qfs/complex_matrix.hpp"

namespace qfs {

/// Completely positive trace-preserving map as a Kraus operator list.
/// Unitaries are the one-element case. Construction validates
/// sum_k K_k^dag K_k = I within tol::cptp.
class Channel {
 public:
  explicit Channel(std::vector<ComplexMatrix> kraus, std::string label = "kraus");

  const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_; }
  std::size_t dim() const { return kraus_.front().rows(); }
  std::size_t kraus_count() const { return kraus_.size(); }

  // One Kraus operator and trace preservation together force unitarity.
  bool is_single_unitary() const { return kraus_.size() == 1; }

  const std::string& label() const { return label_; }

  // Direct small-matrix application: rho -> sum_k K rho K^dag.
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  std::vector<ComplexMatrix> kraus_;
  std::string label_;
};

Channel unitary_channel(const ComplexMatrix& u, std::string label = "unitary");
Channel identity_channel(std::size_t dim);

// Parameter conventions (closed-form Bloch action on one qubit):
//   dephasing(p):          rho -> (1-p/2) rho + (p/2) sigma_z rho sigma_z;
//                          off-diagonals scale by (1-p), fully dephased at p=1.
//   depolarizing(p):       rho -> (1-p) rho + p I/2.
//   amplitude_damping(g):  standard two-operator form, |1><1| decays by (1-g).
Channel dephasing(double p);
Channel depolarizing(double p);
Channel amplitude_damping(double gamma);

// Dimension-d generalization of dephasing: rho -> (1-p) rho + p diag(rho).
// For dim = 2 this is the same map as dephasing(p) in a different Kraus form.
Channel dephasing_dim(double p, std::size_t dim);

// Convex combination of unitary conjugations: Kraus set {sqrt(p_i) U_i}.
Channel mixed_unitary(const std::vector<double>& weights, const std::vector<ComplexMatrix>& unitaries);

// Apply b after a: Kraus products {B_j A_k}.
Channel compose(const Channel& a, const Channel& b);

}  // namespace qfs
