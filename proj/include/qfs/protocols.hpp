#pragma once

#include <string>
#include <vector>

#include "qfs/engine.hpp"
#include "qfs/fork_spec.hpp"

namespace qfs {

/// Outcome of the teleportation-witness circuit. `witness_value` is affine in
/// the measured correlator: (1 - 3*qfs_measured)/4 for the equal-weight
/// three-branch circuit, where qfs_measured = <XX - YY + ZZ>/3.
struct WitnessReport {
  double qfs_measured = 0.0;
  double witness_value = 0.0;
  bool entangled_flag = false;
};

/// Outcome of the single-qubit purity circuit. purity_sum = 3*qfs_measured is
/// sum_a <sigma_a>^2 over x,y,z of the channel output; trace_purity is the
/// independent tr(rho^2) cross-check, equal to (1 + purity_sum)/2.
struct PurityReport {
  double qfs_measured = 0.0;
  double purity_sum = 0.0;
  double trace_purity = 0.0;
};

enum class PurityControlMode { Qutrit, TwoQubitEncoded };

enum class RotationAxis { X, Y, Z };

// Canonical weighted-power-sum circuit: branch i's channel rides on slot i-1
// of every copy, so in branch i the target experiences channels[i-1] while
// the ancillas absorb the rest. `obs` is the per-copy observable.
ForkSpec make_power_sum_spec(std::size_t d, std::size_t q, const std::vector<double>& weights,
                             const std::vector<Channel>& channels, const ComplexMatrix& obs,
                             const QuantumState& target,
                             const std::vector<QuantumState>* ancillas = nullptr,
                             bool mixed_control = false);

/// sum_i p_i <obs>^q over the branch channel outputs, via one forked register.
double weighted_power_sum(std::size_t d, std::size_t q, const std::vector<double>& weights,
                          const std::vector<Channel>& channels, const ComplexMatrix& obs,
                          const QuantumState& target);

/// tr(obs * Phi(rho)) for the mixed unitary channel Phi = sum_i p_i U_i . U_i^dag,
/// realized as a linear (q = 1) forked sum.
double mixed_unitary_expectation(const std::vector<double>& weights,
                                 const std::vector<ComplexMatrix>& unitaries, const ComplexMatrix& obs,
                                 const QuantumState& target);

// Channel twirling: branch i's slot pipeline is U_i, then `inner`, then
// U_i^dag, so the measured value is tr(obs * avg_i p_i U_i^dag inner(U_i rho U_i^dag) U_i).
ForkSpec make_twirl_spec(const std::vector<ComplexMatrix>& twirl_set, const std::vector<double>& weights,
                         const Channel& inner, const ComplexMatrix& obs, const QuantumState& target);

double twirled_expectation(const std::vector<ComplexMatrix>& twirl_set, const std::vector<double>& weights,
                           const Channel& inner, const ComplexMatrix& obs, const QuantumState& target);

// Three-branch qutrit circuit measuring <ZZ> after per-branch basis changes
// HxH, (HS^dag)x(HS), and identity, which lands <XX>, -<YY>, and <ZZ> in one
// observable. Requires a two-qubit (radix-4) input state.
ForkSpec make_witness_spec(const QuantumState& two_qubit_state);

WitnessReport teleportation_witness(const QuantumState& two_qubit_state);

// d=3, q=2 purity circuit: every slot of every copy first passes through
// `inner`, then the slot's branch basis change (H for x, HS^dag for y,
// identity for z); <ZZ> on the two target copies gives the mean squared Pauli
// expectation of the channel output.
ForkSpec make_purity_spec(const Channel& inner, const QuantumState& qubit_state, PurityControlMode mode);

PurityReport purity_benchmark(const Channel& inner, const QuantumState& qubit_state, PurityControlMode mode);

// Control preparation for three equal-weight branches on two qubits:
// (H x R_y(theta))|00> with theta = 2*arccos(sqrt(2/3)), branches triggered by
// {|00>}, {|10>}, {|01>,|11>}.
ControlSpec two_qubit_three_way_control();

// Axis discrimination: target R_axis(theta)|0>, equal-weight two-branch fork
// with H on the ancilla-facing slot, <Z> on the target. Equals
// (<sigma_z> + <sigma_x>)/2 of the rotated state.
ForkSpec make_axis_spec(RotationAxis axis, double theta);

double axis_discrimination(RotationAxis axis, double theta);

/// Closed-form axis-discrimination values: cos(theta)/2 for X,
/// (cos(theta)+sin(theta))/2 for Y, 1/2 for Z.
double theory_value(RotationAxis axis, double theta);
std::vector<double> theory_curve(RotationAxis axis, const std::vector<double>& theta_grid);

RotationAxis axis_from_name(const std::string& name);
const char* axis_name(RotationAxis axis);

}  // namespace qfs
