#include "qfs/channel.hpp"

#include <cmath>

#include "qfs/errors.hpp"
#include "qfs/gates.hpp"
#include "qfs/tolerances.hpp"

namespace qfs {

Channel::Channel(std::vector<ComplexMatrix> kraus, std::string label)
    : kraus_(std::move(kraus)), label_(std::move(label)) {
  if (kraus_.empty()) throw validation_error("channel needs at least one Kraus operator");
  const std::size_t d = kraus_.front().rows();
  ComplexMatrix sum(d, d);
  for (const ComplexMatrix& k : kraus_) {
    if (!k.is_square() || k.rows() != d) {
      throw validation_error("channel Kraus operators must be square with a common dimension");
    }
    if (!is_finite(k)) throw validation_error("channel Kraus operators must be finite");
    sum = add(sum, matmul(dagger(k), k));
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(d)) > tol::cptp) {
    throw validation_error("channel is not trace preserving (sum K^dag K != I)");
  }
}

ComplexMatrix Channel::apply(const ComplexMatrix& rho) const {
  if (!rho.is_square() || rho.rows() != dim()) throw validation_error("channel/state dimension mismatch");
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const ComplexMatrix& k : kraus_) {
    out = add(out, matmul(k, matmul(rho, dagger(k))));
  }
  return out;
}

Channel unitary_channel(const ComplexMatrix& u, std::string label) {
  if (!is_unitary(u, tol::structural)) throw validation_error("unitary_channel: operator is not unitary");
  return Channel({u}, std::move(label));
}

Channel identity_channel(std::size_t dim) {
  return Channel({ComplexMatrix::identity(dim)}, "identity");
}

namespace {
void check_unit_interval(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw validation_error(std::string(name) + ": parameter must lie in [0,1]");
  }
}
}  // namespace

Channel dephasing(double p) {
  check_unit_interval(p, "dephasing");
  const double a = std::sqrt(1.0 - p / 2.0);
  const double b = std::sqrt(p / 2.0);
  return Channel({scale(a, gates::identity2()), scale(b, gates::sigma_z())},
                 "dephasing(" + std::to_string(p) + ")");
}

Channel depolarizing(double p) {
  check_unit_interval(p, "depolarizing");
  const double a = std::sqrt(1.0 - 3.0 * p / 4.0);
  const double b = std::sqrt(p / 4.0);
  return Channel({scale(a, gates::identity2()), scale(b, gates::sigma_x()), scale(b, gates::sigma_y()),
                  scale(b, gates::sigma_z())},
                 "depolarizing(" + std::to_string(p) + ")");
}

Channel amplitude_damping(double gamma) {
  check_unit_interval(gamma, "amplitude_damping");
  const ComplexMatrix k0 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}});
  const ComplexMatrix k1 = ComplexMatrix::from_rows({{0.0, std::sqrt(gamma)}, {0.0, 0.0}});
  return Channel({k0, k1}, "amplitude_damping(" + std::to_string(gamma) + ")");
}

Channel dephasing_dim(double p, std::size_t dim) {
  check_unit_interval(p, "dephasing_dim");
  if (dim < 2) throw validation_error("dephasing_dim: dimension must be at least 2");
  std::vector<ComplexMatrix> kraus;
  kraus.push_back(scale(std::sqrt(1.0 - p), ComplexMatrix::identity(dim)));
  for (std::size_t i = 0; i < dim; ++i) {
    ComplexMatrix proj(dim, dim);
    proj(i, i) = std::sqrt(p);
    kraus.push_back(proj);
  }
  return Channel(std::move(kraus), "dephasing_dim(" + std::to_string(p) + "," + std::to_string(dim) + ")");
}

Channel mixed_unitary(const std::vector<double>& weights, const std::vector<ComplexMatrix>& unitaries) {
  if (weights.empty() || weights.size() != unitaries.size()) {
    throw validation_error("mixed_unitary: weights and unitaries must match and be nonempty");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw validation_error("mixed_unitary: weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol::weight_sum) throw validation_error("mixed_unitary: weights must sum to 1");
  const std::size_t d = unitaries.front().rows();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (unitaries[i].rows() != d || !is_unitary(unitaries[i], tol::structural)) {
      throw validation_error("mixed_unitary: every operator must be unitary with a common dimension");
    }
    kraus.push_back(scale(std::sqrt(weights[i]), unitaries[i]));
  }
  return Channel(std::move(kraus), "mixed_unitary");
}

Channel compose(const Channel& a, const Channel& b) {
  if (a.dim() != b.dim()) throw validation_error("compose: channel dimension mismatch");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus_count() * b.kraus_count());
  for (const ComplexMatrix& kb : b.kraus_ops()) {
    for (const ComplexMatrix& ka : a.kraus_ops()) {
      kraus.push_back(matmul(kb, ka));
    }
  }
  return Channel(std::move(kraus), a.label() + ";" + b.label());
}

}  // namespace qfs
