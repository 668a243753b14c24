#include "qfs/protocols.hpp"

#include <cmath>
#include <string>

#include "qfs/errors.hpp"
#include "qfs/gates.hpp"
#include "qfs/tolerances.hpp"

namespace qfs {

namespace {

ComplexMatrix kron_power(const ComplexMatrix& m, std::size_t count) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t i = 0; i < count; ++i) out = kron(out, m);
  return out;
}

const std::vector<double> kEqualThirds{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

}  // namespace

ForkSpec make_power_sum_spec(std::size_t d, std::size_t q, const std::vector<double>& weights,
                             const std::vector<Channel>& channels, const ComplexMatrix& obs,
                             const QuantumState& target, const std::vector<QuantumState>* ancillas,
                             bool mixed_control) {
  if (channels.size() != d) {
    throw validation_error("make_power_sum_spec: expected one channel per branch");
  }
  if (target.layout().size() != 1) {
    throw validation_error("make_power_sum_spec: target must be a single-slot state");
  }
  const std::size_t radix = target.layout().radix(0);
  ForkSpec spec;
  spec.d = d;
  spec.q = q;
  spec.control = mixed_control ? ControlSpec::mixed_weights(weights) : ControlSpec::pure_weights(weights);
  spec.slot_radix = radix;
  spec.target_state = target;
  spec.ancilla_states = ancillas ? *ancillas : ForkSpec::default_ancillas(d, q, radix);
  spec.pipelines = ForkSpec::empty_pipelines(d, q);
  for (std::size_t copy = 0; copy < q; ++copy) {
    for (std::size_t slot = 0; slot < d; ++slot) {
      spec.pipelines[copy][slot].push_back(channels[slot]);
    }
  }
  spec.measurement = ExpectationMeasurement{kron_power(obs, q)};
  spec.validate();
  return spec;
}

double weighted_power_sum(std::size_t d, std::size_t q, const std::vector<double>& weights,
                          const std::vector<Channel>& channels, const ComplexMatrix& obs,
                          const QuantumState& target) {
  return run(make_power_sum_spec(d, q, weights, channels, obs, target)).value;
}

double mixed_unitary_expectation(const std::vector<double>& weights,
                                 const std::vector<ComplexMatrix>& unitaries, const ComplexMatrix& obs,
                                 const QuantumState& target) {
  if (weights.size() != unitaries.size() || weights.empty()) {
    throw validation_error("mixed_unitary_expectation: weights/unitaries size mismatch");
  }
  std::vector<Channel> channels;
  channels.reserve(unitaries.size());
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    channels.push_back(unitary_channel(unitaries[i], "unitary[" + std::to_string(i) + "]"));
  }
  return weighted_power_sum(weights.size(), 1, weights, channels, obs, target);
}

ForkSpec make_twirl_spec(const std::vector<ComplexMatrix>& twirl_set, const std::vector<double>& weights,
                         const Channel& inner, const ComplexMatrix& obs, const QuantumState& target) {
  if (twirl_set.empty() || twirl_set.size() != weights.size()) {
    throw validation_error("make_twirl_spec: weights/unitaries size mismatch");
  }
  std::vector<Channel> channels;
  channels.reserve(twirl_set.size());
  for (std::size_t i = 0; i < twirl_set.size(); ++i) {
    const std::string id = std::to_string(i + 1);
    const Channel forward = unitary_channel(twirl_set[i], "twirl_u" + id);
    const Channel backward = unitary_channel(dagger(twirl_set[i]), "twirl_u" + id + "_dag");
    channels.push_back(compose(compose(forward, inner), backward));
  }
  return make_power_sum_spec(twirl_set.size(), 1, weights, channels, obs, target);
}

double twirled_expectation(const std::vector<ComplexMatrix>& twirl_set, const std::vector<double>& weights,
                           const Channel& inner, const ComplexMatrix& obs, const QuantumState& target) {
  return run(make_twirl_spec(twirl_set, weights, inner, obs, target)).value;
}

ForkSpec make_witness_spec(const QuantumState& two_qubit_state) {
  if (two_qubit_state.layout().size() != 1 || two_qubit_state.layout().radix(0) != 4) {
    throw validation_error("make_witness_spec: state must be one radix-4 slot (two qubits)");
  }
  // Per-branch basis changes so that a final <ZZ> reads out <XX>, -<YY>, <ZZ>.
  // The middle branch is deliberately asymmetric: (HS^dag)^dag Z (HS^dag) =
  // S X S^dag = Y on the first qubit, while (HS)^dag Z (HS) = S^dag X S = -Y
  // on the second, so measuring ZZ there contributes -<YY>.
  const ComplexMatrix bx = kron(gates::hadamard(), gates::hadamard());
  const ComplexMatrix by = kron(matmul(gates::hadamard(), gates::s_dagger()),
                                matmul(gates::hadamard(), gates::s_gate()));
  const ComplexMatrix bz = ComplexMatrix::identity(4);
  const std::vector<Channel> channels{unitary_channel(bx, "basis_xx"), unitary_channel(by, "basis_yy_neg"),
                                      unitary_channel(bz, "basis_zz")};
  const ComplexMatrix zz = kron(gates::sigma_z(), gates::sigma_z());
  return make_power_sum_spec(3, 1, kEqualThirds, channels, zz, two_qubit_state);
}

WitnessReport teleportation_witness(const QuantumState& two_qubit_state) {
  WitnessReport report;
  report.qfs_measured = run(make_witness_spec(two_qubit_state)).value;
  report.witness_value = (1.0 - 3.0 * report.qfs_measured) / 4.0;
  report.entangled_flag = report.witness_value < 0.0;
  return report;
}

ControlSpec two_qubit_three_way_control() {
  const double theta = 2.0 * std::acos(std::sqrt(2.0 / 3.0));
  const ComplexMatrix prep = kron(gates::hadamard(), gates::ry(theta));
  return ControlSpec::encoded(prep, {{0}, {2}, {1, 3}});
}

ForkSpec make_purity_spec(const Channel& inner, const QuantumState& qubit_state, PurityControlMode mode) {
  if (qubit_state.layout().size() != 1 || qubit_state.layout().radix(0) != 2) {
    throw validation_error("make_purity_spec: state must be one qubit");
  }
  if (inner.dim() != 2) throw validation_error("make_purity_spec: channel must act on one qubit");
  ForkSpec spec;
  spec.d = 3;
  spec.q = 2;
  spec.control = mode == PurityControlMode::Qutrit ? ControlSpec::mixed_weights(kEqualThirds)
                                                   : two_qubit_three_way_control();
  spec.slot_radix = 2;
  spec.target_state = qubit_state;
  spec.ancilla_states = ForkSpec::default_ancillas(spec.d, spec.q, spec.slot_radix);
  spec.pipelines = ForkSpec::empty_pipelines(spec.d, spec.q);
  const ComplexMatrix basis_changes[3] = {gates::hadamard(),
                                          matmul(gates::hadamard(), gates::s_dagger()),
                                          ComplexMatrix::identity(2)};
  const char* labels[3] = {"basis_x", "basis_y", "basis_z"};
  for (std::size_t copy = 0; copy < spec.q; ++copy) {
    for (std::size_t slot = 0; slot < spec.d; ++slot) {
      // The channel under test hits every slot, targets and ancillas alike.
      spec.pipelines[copy][slot].push_back(inner);
      spec.pipelines[copy][slot].push_back(unitary_channel(basis_changes[slot], labels[slot]));
    }
  }
  spec.measurement = ExpectationMeasurement{kron(gates::sigma_z(), gates::sigma_z())};
  spec.validate();
  return spec;
}

PurityReport purity_benchmark(const Channel& inner, const QuantumState& qubit_state,
                              PurityControlMode mode) {
  PurityReport report;
  report.qfs_measured = run(make_purity_spec(inner, qubit_state, mode)).value;
  report.purity_sum = 3.0 * report.qfs_measured;
  const ComplexMatrix sigma = inner.apply(qubit_state.to_density().density_matrix());
  report.trace_purity = trace(matmul(sigma, sigma)).real();
  return report;
}

ForkSpec make_axis_spec(RotationAxis axis, double theta) {
  ComplexMatrix rotation;
  switch (axis) {
    case RotationAxis::X:
      rotation = gates::rx(theta);
      break;
    case RotationAxis::Y:
      rotation = gates::ry(theta);
      break;
    case RotationAxis::Z:
      rotation = gates::rz(theta);
      break;
  }
  ComplexVector zero{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
  const QuantumState target = QuantumState::pure(RegisterLayout::single(2), matvec(rotation, zero));
  // Branch 1 leaves the target alone; branch 2's H rides on the ancilla-facing
  // slot between the two c-swaps, turning the final <Z> into <X> there.
  const std::vector<Channel> channels{identity_channel(2), unitary_channel(gates::hadamard(), "h")};
  return make_power_sum_spec(2, 1, {0.5, 0.5}, channels, gates::sigma_z(), target);
}

double axis_discrimination(RotationAxis axis, double theta) {
  return run(make_axis_spec(axis, theta)).value;
}

double theory_value(RotationAxis axis, double theta) {
  switch (axis) {
    case RotationAxis::X:
      return std::cos(theta) / 2.0;
    case RotationAxis::Y:
      return (std::cos(theta) + std::sin(theta)) / 2.0;
    case RotationAxis::Z:
      return 0.5;
  }
  throw validation_error("unknown rotation axis");
}

std::vector<double> theory_curve(RotationAxis axis, const std::vector<double>& theta_grid) {
  std::vector<double> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid) out.push_back(theory_value(axis, theta));
  return out;
}

RotationAxis axis_from_name(const std::string& name) {
  if (name == "x" || name == "X") return RotationAxis::X;
  if (name == "y" || name == "Y") return RotationAxis::Y;
  if (name == "z" || name == "Z") return RotationAxis::Z;
  throw validation_error("unknown axis '" + name + "' (expected x, y or z)");
}

const char* axis_name(RotationAxis axis) {
  switch (axis) {
    case RotationAxis::X:
      return "x";
    case RotationAxis::Y:
      return "y";
    case RotationAxis::Z:
      return "z";
  }
  return "?";
}

}  // namespace qfs
