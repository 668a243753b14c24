#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qfs/channel.hpp"
#include "qfs/complex_matrix.hpp"
#include "qfs/layout.hpp"

namespace qfs {

/// Hermitian operator acting on a subset of subsystems, identity elsewhere.
struct Observable {
  ComplexMatrix matrix;
  std::vector<std::size_t> acting_on;
};

/// Hermitian idempotent operator (P^2 = P) on a subset of subsystems.
struct Projector {
  ComplexMatrix matrix;
  std::vector<std::size_t> acting_on;
};

/// Full-space matrix acting as `op` on `targets` (in the given order, which may
/// be non-adjacent and permuted) and as identity on every other subsystem.
ComplexMatrix embed(const ComplexMatrix& op, const RegisterLayout& layout,
                    const std::vector<std::size_t>& targets);

/// Quantum state over a mixed-radix register, stored as a pure amplitude
/// vector or a density matrix. States are immutable values: every operation
/// returns a new state, so they can be shared freely across threads.
class QuantumState {
 public:
  static QuantumState pure(RegisterLayout layout, ComplexVector amplitudes);
  static QuantumState density(RegisterLayout layout, ComplexMatrix rho);
  static QuantumState basis(RegisterLayout layout, std::size_t index);

  bool is_pure() const { return std::holds_alternative<ComplexVector>(form_); }
  bool is_density() const { return !is_pure(); }
  const RegisterLayout& layout() const { return layout_; }
  std::size_t dim() const { return layout_.dim(); }

  const ComplexVector& amplitudes() const;
  const ComplexMatrix& density_matrix() const;

  /// Density-matrix view of the state (|psi><psi| for pure input). Promotion
  /// is one-way; nothing ever converts a density matrix back to a vector.
  QuantumState to_density() const;

  QuantumState apply_unitary(const ComplexMatrix& u, const std::vector<std::size_t>& targets) const;
  QuantumState apply_channel(const Channel& ch, const std::vector<std::size_t>& targets) const;

  /// Basis relabeling b -> perm[b]. perm must be a bijection on [0, dim).
  QuantumState permute_basis(const std::vector<std::uint32_t>& perm) const;

  double expectation(const Observable& obs) const;
  double projective_probability(const Projector& proj) const;

  /// i.i.d. eigenvalue samples of `obs` under the Born rule; deterministic for
  /// a fixed seed.
  std::vector<double> born_sample(const Observable& obs, std::size_t shots, std::uint64_t seed) const;

  /// Reduced density matrix over `keep` (ascending subsystem order).
  ComplexMatrix reduced_density(const std::vector<std::size_t>& keep) const;

 private:
  struct Unchecked {};
  QuantumState(RegisterLayout layout, ComplexVector amps, Unchecked);
  QuantumState(RegisterLayout layout, ComplexMatrix rho, Unchecked);

  void check_targets(const std::vector<std::size_t>& targets, std::size_t op_dim) const;

  RegisterLayout layout_;
  std::variant<ComplexVector, ComplexMatrix> form_;
};

/// Tensor product of two states (pure x pure stays pure).
QuantumState tensor(const QuantumState& a, const QuantumState& b);

}  // namespace qfs
