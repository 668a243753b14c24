#pragma once

#include <variant>
#include <vector>

#include "qfs/channel.hpp"
#include "qfs/complex_matrix.hpp"
#include "qfs/state.hpp"

namespace qfs {

struct PureWeights {
  std::vector<double> weights;
};

struct MixedWeights {
  std::vector<double> weights;
};

// Control register prepared by a unitary, with each branch triggered by a set
// of control basis states. Covers multi-qubit stand-ins for a qudit control.
struct EncodedControl {
  ComplexMatrix prep_unitary;                         // applied to |0...0>
  std::vector<std::vector<std::size_t>> branch_sets;  // disjoint, covering 0..dim-1
};

/// How the control subsystem is prepared and how its basis states map to
/// branches. The diagonal populations of the control fix the branch weights.
class ControlSpec {
 public:
  static ControlSpec pure_weights(std::vector<double> weights);
  static ControlSpec mixed_weights(std::vector<double> weights);
  static ControlSpec encoded(ComplexMatrix prep_unitary, std::vector<std::vector<std::size_t>> branch_sets);

  std::size_t branch_count() const;
  std::size_t control_dim() const;

  // Branch weights as populated by the preparation. For the encoded variant
  // these are the summed |<b|prep|0>|^2 over each branch set.
  std::vector<double> effective_weights() const;

  // Control basis indices that trigger branch `b` (0-based).
  std::vector<std::size_t> branch_set(std::size_t b) const;

  bool is_mixed_weights() const { return std::holds_alternative<MixedWeights>(v_); }
  bool is_encoded() const { return std::holds_alternative<EncodedControl>(v_); }
  const EncodedControl& encoded_form() const { return std::get<EncodedControl>(v_); }

 private:
  explicit ControlSpec(std::variant<PureWeights, MixedWeights, EncodedControl> v) : v_(std::move(v)) {}
  std::variant<PureWeights, MixedWeights, EncodedControl> v_;
};

struct ExpectationMeasurement {
  ComplexMatrix observable;  // joint operator on the q target slots
};

struct ProjectiveMeasurement {
  std::vector<ComplexMatrix> projectors;  // one per copy
};

using Measurement = std::variant<ExpectationMeasurement, ProjectiveMeasurement>;

/// Complete description of one forking-sampler instance: d branches, q copies,
/// control preparation, slot states, the per-slot channel pipelines applied
/// between fork and unfork, and the final measurement.
struct ForkSpec {
  std::size_t d = 1;
  std::size_t q = 1;
  ControlSpec control = ControlSpec::pure_weights({1.0});
  std::size_t slot_radix = 2;
  QuantumState target_state = QuantumState::basis(RegisterLayout::single(2), 0);
  std::vector<QuantumState> ancilla_states;                 // q*(d-1) single-slot states
  std::vector<std::vector<std::vector<Channel>>> pipelines; // [copy][slot] -> ordered channels
  Measurement measurement = ExpectationMeasurement{ComplexMatrix::identity(2)};

  void validate() const;

  // All-|0> ancillas of the right shape.
  static std::vector<QuantumState> default_ancillas(std::size_t d, std::size_t q, std::size_t slot_radix);
  // Empty pipeline table of the right shape.
  static std::vector<std::vector<std::vector<Channel>>> empty_pipelines(std::size_t d, std::size_t q);
};

}  // namespace qfs
