#include "qfs/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qfs/config.hpp"
#include "qfs/errors.hpp"
#include "qfs/rng.hpp"
#include "qfs/tolerances.hpp"

namespace qfs {

namespace {

// Addresses the amplitude blocks touched by an operator on `targets`.
// A block enumerates the joint digits of the targets (targets[0] most
// significant, matching Kronecker factor order); `base` walks the joint
// digits of every other subsystem.
struct TargetIndexer {
  std::size_t block = 1;
  std::size_t rest_count = 1;
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> rest_radices;
  std::vector<std::size_t> rest_strides;

  TargetIndexer(const RegisterLayout& layout, const std::vector<std::size_t>& targets) {
    const auto radices = layout.radices();
    const auto strides = idx::strides_for(radices);
    offsets = idx::subset_offsets(radices, strides, targets);
    block = offsets.size();
    for (std::size_t s : idx::complement_of(radices.size(), targets)) {
      rest_radices.push_back(radices[s]);
      rest_strides.push_back(strides[s]);
    }
    rest_count = layout.dim() / block;
  }

  std::size_t base(std::size_t rest_index) const {
    std::size_t b = 0;
    for (std::size_t i = rest_radices.size(); i-- > 0;) {
      b += (rest_index % rest_radices[i]) * rest_strides[i];
      rest_index /= rest_radices[i];
    }
    return b;
  }
};

ComplexVector apply_local_vec(const ComplexMatrix& op, const ComplexVector& x, const TargetIndexer& ti) {
  const std::size_t m = ti.block;
  ComplexVector out(x.size());
  ComplexVector in_block(m);
  for (std::size_t rest = 0; rest < ti.rest_count; ++rest) {
    const std::size_t base = ti.base(rest);
    for (std::size_t c = 0; c < m; ++c) in_block[c] = x[base + ti.offsets[c]];
    for (std::size_t r = 0; r < m; ++r) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < m; ++c) acc += op(r, c) * in_block[c];
      out[base + ti.offsets[r]] = acc;
    }
  }
  return out;
}

// out = (op on targets) * a, accumulated into `out`.
void left_apply_local(const ComplexMatrix& op, const ComplexMatrix& a, const TargetIndexer& ti,
                      ComplexMatrix& out) {
  const std::size_t m = ti.block;
  const std::size_t dim = a.rows();
  for (std::size_t rest = 0; rest < ti.rest_count; ++rest) {
    const std::size_t base = ti.base(rest);
    for (std::size_t r = 0; r < m; ++r) {
      Complex* out_row = &out(base + ti.offsets[r], 0);
      for (std::size_t c = 0; c < m; ++c) {
        const Complex coeff = op(r, c);
        if (coeff == Complex{0.0, 0.0}) continue;
        const Complex* in_row = &a(base + ti.offsets[c], 0);
        for (std::size_t j = 0; j < dim; ++j) out_row[j] += coeff * in_row[j];
      }
    }
  }
}

// out (+)= a * (op on targets)^dag.
void right_apply_local_dagger(const ComplexMatrix& op, const ComplexMatrix& a, const TargetIndexer& ti,
                              ComplexMatrix& out, bool accumulate) {
  const std::size_t m = ti.block;
  const std::size_t dim = a.rows();
  ComplexVector buf(m);
  for (std::size_t r = 0; r < dim; ++r) {
    const Complex* a_row = &a(r, 0);
    Complex* out_row = &out(r, 0);
    for (std::size_t rest = 0; rest < ti.rest_count; ++rest) {
      const std::size_t base = ti.base(rest);
      for (std::size_t c = 0; c < m; ++c) buf[c] = a_row[base + ti.offsets[c]];
      for (std::size_t i = 0; i < m; ++i) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < m; ++c) acc += buf[c] * std::conj(op(i, c));
        if (accumulate) {
          out_row[base + ti.offsets[i]] += acc;
        } else {
          out_row[base + ti.offsets[i]] = acc;
        }
      }
    }
  }
}

Complex local_expectation(const ComplexMatrix& op, const QuantumState& state, const TargetIndexer& ti) {
  const std::size_t m = ti.block;
  Complex acc{0.0, 0.0};
  if (state.is_pure()) {
    const ComplexVector& x = state.amplitudes();
    ComplexVector xs(m);
    for (std::size_t rest = 0; rest < ti.rest_count; ++rest) {
      const std::size_t base = ti.base(rest);
      for (std::size_t c = 0; c < m; ++c) xs[c] = x[base + ti.offsets[c]];
      for (std::size_t i = 0; i < m; ++i) {
        Complex row{0.0, 0.0};
        for (std::size_t j = 0; j < m; ++j) row += op(i, j) * xs[j];
        acc += std::conj(xs[i]) * row;
      }
    }
  } else {
    const ComplexMatrix& rho = state.density_matrix();
    for (std::size_t rest = 0; rest < ti.rest_count; ++rest) {
      const std::size_t base = ti.base(rest);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          acc += op(i, j) * rho(base + ti.offsets[j], base + ti.offsets[i]);
        }
      }
    }
  }
  return acc;
}

double real_part_checked(Complex value, const char* what) {
  if (std::abs(value.imag()) > tol::equivalence) {
    throw std::runtime_error(std::string(what) + ": imaginary part " + std::to_string(value.imag()) +
                             " exceeds tolerance");
  }
  return value.real();
}

}  // namespace

ComplexMatrix embed(const ComplexMatrix& op, const RegisterLayout& layout,
                    const std::vector<std::size_t>& targets) {
  if (!op.is_square()) throw validation_error("embed: operator must be square");
  std::size_t target_dim = 1;
  std::vector<bool> seen(layout.size(), false);
  for (std::size_t t : targets) {
    if (t >= layout.size()) throw validation_error("embed: target subsystem out of range");
    if (seen[t]) throw validation_error("embed: repeated target subsystem");
    seen[t] = true;
    target_dim *= layout.radix(t);
  }
  if (op.rows() != target_dim) {
    throw validation_error("embed: operator dimension does not match the target subsystems");
  }
  if (layout.dim() > caps().max_density_dim) {
    throw dimension_error("embed result exceeds the configured operator dimension cap");
  }
  TargetIndexer ti(layout, targets);
  ComplexMatrix out(layout.dim(), layout.dim());
  for (std::size_t rest = 0; rest < ti.rest_count; ++rest) {
    const std::size_t base = ti.base(rest);
    for (std::size_t i = 0; i < ti.block; ++i) {
      for (std::size_t j = 0; j < ti.block; ++j) {
        out(base + ti.offsets[i], base + ti.offsets[j]) = op(i, j);
      }
    }
  }
  return out;
}

QuantumState::QuantumState(RegisterLayout layout, ComplexVector amps, Unchecked)
    : layout_(std::move(layout)), form_(std::move(amps)) {}

QuantumState::QuantumState(RegisterLayout layout, ComplexMatrix rho, Unchecked)
    : layout_(std::move(layout)), form_(std::move(rho)) {}

QuantumState QuantumState::pure(RegisterLayout layout, ComplexVector amplitudes) {
  if (amplitudes.size() != layout.dim()) {
    throw validation_error("pure state length does not match the register dimension");
  }
  if (layout.dim() > caps().max_pure_dim) {
    throw dimension_error("pure state exceeds the configured state dimension cap");
  }
  for (const Complex& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw validation_error("pure state amplitudes must be finite");
    }
  }
  if (std::abs(norm2(amplitudes) - 1.0) > tol::structural) {
    throw validation_error("pure state must be normalized");
  }
  return QuantumState(std::move(layout), std::move(amplitudes), Unchecked{});
}

QuantumState QuantumState::density(RegisterLayout layout, ComplexMatrix rho) {
  if (!rho.is_square() || rho.rows() != layout.dim()) {
    throw validation_error("density matrix dimension does not match the register");
  }
  if (layout.dim() > caps().max_density_dim) {
    throw dimension_error("density matrix exceeds the configured dimension cap");
  }
  if (!is_finite(rho)) throw validation_error("density matrix entries must be finite");
  if (!is_hermitian(rho, tol::structural)) throw validation_error("density matrix must be Hermitian");
  if (std::abs(trace(rho) - Complex{1.0, 0.0}) > tol::structural) {
    throw validation_error("density matrix must have unit trace");
  }
  // Full spectral positivity check is O(D^3); run it for user-scale inputs and
  // fall back to the diagonal necessary condition for large matrices, where
  // states are produced by positivity-preserving operations anyway.
  if (rho.rows() <= 64) {
    const HermitianEig eig = hermitian_eig(rho);
    if (eig.eigenvalues.front() < -tol::structural) {
      throw validation_error("density matrix has a negative eigenvalue");
    }
  } else {
    for (std::size_t i = 0; i < rho.rows(); ++i) {
      if (rho(i, i).real() < -tol::structural) {
        throw validation_error("density matrix has a negative diagonal entry");
      }
    }
  }
  return QuantumState(std::move(layout), std::move(rho), Unchecked{});
}

QuantumState QuantumState::basis(RegisterLayout layout, std::size_t index) {
  if (index >= layout.dim()) throw validation_error("basis state index out of range");
  if (layout.dim() > caps().max_pure_dim) {
    throw dimension_error("pure state exceeds the configured state dimension cap");
  }
  ComplexVector amps(layout.dim(), Complex{0.0, 0.0});
  amps[index] = 1.0;
  return QuantumState(std::move(layout), std::move(amps), Unchecked{});
}

const ComplexVector& QuantumState::amplitudes() const {
  if (!is_pure()) throw validation_error("state is not in pure form");
  return std::get<ComplexVector>(form_);
}

const ComplexMatrix& QuantumState::density_matrix() const {
  if (!is_density()) throw validation_error("state is not in density form");
  return std::get<ComplexMatrix>(form_);
}

QuantumState QuantumState::to_density() const {
  if (is_density()) return *this;
  if (dim() > caps().max_density_dim) {
    throw dimension_error("density promotion exceeds the configured dimension cap");
  }
  const ComplexVector& x = amplitudes();
  return QuantumState(layout_, outer(x, x), Unchecked{});
}

void QuantumState::check_targets(const std::vector<std::size_t>& targets, std::size_t op_dim) const {
  if (targets.empty()) throw validation_error("operation needs at least one target subsystem");
  std::vector<bool> seen(layout_.size(), false);
  std::size_t d = 1;
  for (std::size_t t : targets) {
    if (t >= layout_.size()) throw validation_error("target subsystem out of range");
    if (seen[t]) throw validation_error("repeated target subsystem");
    seen[t] = true;
    d *= layout_.radix(t);
  }
  if (d != op_dim) throw validation_error("operator dimension does not match the target subsystems");
}

QuantumState QuantumState::apply_unitary(const ComplexMatrix& u, const std::vector<std::size_t>& targets) const {
  if (!u.is_square() || !is_unitary(u, tol::structural)) {
    throw validation_error("apply_unitary: operator is not unitary");
  }
  check_targets(targets, u.rows());
  TargetIndexer ti(layout_, targets);
  if (is_pure()) {
    return QuantumState(layout_, apply_local_vec(u, amplitudes(), ti), Unchecked{});
  }
  ComplexMatrix tmp(dim(), dim());
  left_apply_local(u, density_matrix(), ti, tmp);
  ComplexMatrix out(dim(), dim());
  right_apply_local_dagger(u, tmp, ti, out, /*accumulate=*/false);
  return QuantumState(layout_, std::move(out), Unchecked{});
}

QuantumState QuantumState::apply_channel(const Channel& ch, const std::vector<std::size_t>& targets) const {
  check_targets(targets, ch.dim());
  const QuantumState promoted = to_density();
  TargetIndexer ti(layout_, targets);
  const ComplexMatrix& rho = promoted.density_matrix();
  ComplexMatrix out(dim(), dim());
  ComplexMatrix tmp(dim(), dim());
  for (const ComplexMatrix& k : ch.kraus_ops()) {
    std::fill(tmp.entries().begin(), tmp.entries().end(), Complex{0.0, 0.0});
    left_apply_local(k, rho, ti, tmp);
    right_apply_local_dagger(k, tmp, ti, out, /*accumulate=*/true);
  }
  return QuantumState(layout_, std::move(out), Unchecked{});
}

QuantumState QuantumState::permute_basis(const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != dim()) throw validation_error("permutation size does not match the register");
  if (is_pure()) {
    const ComplexVector& x = amplitudes();
    ComplexVector out(x.size());
    for (std::size_t b = 0; b < x.size(); ++b) out[perm[b]] = x[b];
    return QuantumState(layout_, std::move(out), Unchecked{});
  }
  const ComplexMatrix& rho = density_matrix();
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    for (std::size_t c = 0; c < rho.cols(); ++c) {
      out(perm[r], perm[c]) = rho(r, c);
    }
  }
  return QuantumState(layout_, std::move(out), Unchecked{});
}

double QuantumState::expectation(const Observable& obs) const {
  if (!is_hermitian(obs.matrix, tol::structural)) {
    throw validation_error("observable must be Hermitian");
  }
  check_targets(obs.acting_on, obs.matrix.rows());
  TargetIndexer ti(layout_, obs.acting_on);
  return real_part_checked(local_expectation(obs.matrix, *this, ti), "expectation");
}

double QuantumState::projective_probability(const Projector& proj) const {
  if (!is_hermitian(proj.matrix, tol::structural)) {
    throw validation_error("projector must be Hermitian");
  }
  if (max_abs_diff(matmul(proj.matrix, proj.matrix), proj.matrix) > tol::equivalence) {
    throw validation_error("projector must be idempotent (P^2 = P)");
  }
  check_targets(proj.acting_on, proj.matrix.rows());
  TargetIndexer ti(layout_, proj.acting_on);
  double p = real_part_checked(local_expectation(proj.matrix, *this, ti), "projective_probability");
  if (p < 0.0) {
    if (p < -tol::probability_clip) throw std::runtime_error("probability below 0 beyond tolerance");
    p = 0.0;
  }
  if (p > 1.0) {
    if (p > 1.0 + tol::probability_clip) throw std::runtime_error("probability above 1 beyond tolerance");
    p = 1.0;
  }
  return p;
}

std::vector<double> QuantumState::born_sample(const Observable& obs, std::size_t shots,
                                              std::uint64_t seed) const {
  if (shots < 1) throw validation_error("born_sample: shots must be at least 1");
  if (!is_hermitian(obs.matrix, tol::structural)) {
    throw validation_error("observable must be Hermitian");
  }
  check_targets(obs.acting_on, obs.matrix.rows());
  TargetIndexer ti(layout_, obs.acting_on);

  const HermitianEig eig = hermitian_eig(obs.matrix);
  const std::size_t m = obs.matrix.rows();
  std::vector<double> probs(m);
  double total = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    ComplexVector v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = eig.eigenvectors(i, k);
    double p = real_part_checked(local_expectation(outer(v, v), *this, ti), "born_sample");
    if (p < 0.0) {
      if (p < -tol::probability_clip) throw std::runtime_error("born_sample: negative outcome probability");
      p = 0.0;
    }
    probs[k] = p;
    total += p;
  }
  if (std::abs(total - 1.0) > tol::probability_clip) {
    throw std::runtime_error("born_sample: outcome probabilities do not sum to 1");
  }
  for (double& p : probs) p /= total;

  Rng rng = make_rng({seed});
  std::vector<double> outcomes;
  outcomes.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = uniform01(rng);
    double cdf = 0.0;
    std::size_t pick = m - 1;
    for (std::size_t k = 0; k < m; ++k) {
      cdf += probs[k];
      if (u < cdf) {
        pick = k;
        break;
      }
    }
    outcomes.push_back(eig.eigenvalues[pick]);
  }
  return outcomes;
}

ComplexMatrix QuantumState::reduced_density(const std::vector<std::size_t>& keep) const {
  return partial_trace(to_density().density_matrix(), layout_.radices(), keep);
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  std::vector<Subsystem> subs = a.layout().subsystems();
  const auto& subs_b = b.layout().subsystems();
  subs.insert(subs.end(), subs_b.begin(), subs_b.end());
  RegisterLayout layout(std::move(subs));
  if (a.is_pure() && b.is_pure()) {
    return QuantumState::pure(layout, kron(a.amplitudes(), b.amplitudes()));
  }
  const ComplexMatrix rho = kron(a.to_density().density_matrix(), b.to_density().density_matrix());
  return QuantumState::density(layout, rho);
}

}  // namespace qfs
