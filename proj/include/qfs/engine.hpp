#pragma once

#include <cstdint>

#include "qfs/circuit_ir.hpp"
#include "qfs/estimate_result.hpp"
#include "qfs/fork_spec.hpp"
#include "qfs/state.hpp"

namespace qfs {

// Subsystem index of (copy, slot): the control, when present, is subsystem 0,
// followed by each copy's target slot and its d-1 ancilla slots.
std::size_t slot_subsystem(const ForkSpec& spec, std::size_t copy, std::size_t slot);
std::vector<std::size_t> target_subsystems(const ForkSpec& spec);

/// Composite register: control (x) for each copy: target slot then the d-1
/// ancilla slots. Copy k uses ancilla_states[k*(d-1) .. (k+1)*(d-1)-1] in slot
/// order. Density form iff any component is mixed or the control weights are.
QuantumState build_register(const ForkSpec& spec);

/// The forking ladder: for each branch i = 2..d in ascending order and each
/// copy, a c-swap that exchanges the copy's target slot with ancilla slot i-1
/// on the control subspace of branch i (a projector-controlled permutation).
QuantumState fork(QuantumState state, const ForkSpec& spec);

/// Per-slot channel pipelines, applied between fork and unfork. Single-Kraus
/// channels on a pure state stay on the amplitude-vector path; any genuine
/// Kraus channel promotes the register to density form.
QuantumState apply_pipelines(QuantumState state, const ForkSpec& spec);

/// Exact reverse of the forking c-swap sequence.
QuantumState unfork(QuantumState state, const ForkSpec& spec);

/// Final measurement of the spec on a prepared register.
double measure(const QuantumState& state, const ForkSpec& spec);

struct RunResult {
  double value = 0.0;
  CircuitIR ir;
  QuantumState final_state;
};

/// Full pipeline: build, fork, pipelines, unfork, measure.
RunResult run(const ForkSpec& spec);

/// Born-rule sampling of the final state's target observable. Sampling the
/// exact final state is statistically identical to rebuilding per shot; the
/// preparation count still reports one target-state build per shot, which is
/// what the estimator costs on hardware.
EstimateResult run_sampled(const ForkSpec& spec, std::size_t shots, std::uint64_t seed);

}  // namespace qfs
