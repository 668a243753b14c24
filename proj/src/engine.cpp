#include "qfs/engine.hpp"

#include <cmath>

#include "qfs/errors.hpp"
#include "qfs/tolerances.hpp"

namespace qfs {

namespace {

bool has_control(const ForkSpec& spec) { return spec.control.control_dim() >= 2; }

QuantumState control_state(const ForkSpec& spec) {
  const std::size_t dc = spec.control.control_dim();
  RegisterLayout layout({Subsystem{dc, {RoleKind::Control, 0, 0}}});
  if (spec.control.is_mixed_weights()) {
    ComplexMatrix rho(dc, dc);
    const auto weights = spec.control.effective_weights();
    for (std::size_t i = 0; i < dc; ++i) rho(i, i) = weights[i];
    return QuantumState::density(std::move(layout), std::move(rho));
  }
  ComplexVector amps(dc, Complex{0.0, 0.0});
  if (spec.control.is_encoded()) {
    const ComplexMatrix& prep = spec.control.encoded_form().prep_unitary;
    for (std::size_t i = 0; i < dc; ++i) amps[i] = prep(i, 0);
  } else {
    const auto weights = spec.control.effective_weights();
    for (std::size_t i = 0; i < dc; ++i) amps[i] = std::sqrt(weights[i]);
  }
  return QuantumState::pure(std::move(layout), std::move(amps));
}

// Target slot first, then the copy's d-1 ancillas: ancilla_states[k*(d-1)+s-1]
// sits in slot s of copy k.
std::vector<const QuantumState*> register_factors(const ForkSpec& spec) {
  std::vector<const QuantumState*> factors;
  for (std::size_t k = 0; k < spec.q; ++k) {
    factors.push_back(&spec.target_state);
    for (std::size_t s = 1; s < spec.d; ++s) {
      factors.push_back(&spec.ancilla_states[k * (spec.d - 1) + (s - 1)]);
    }
  }
  return factors;
}

std::vector<Subsystem> register_subsystems(const ForkSpec& spec) {
  std::vector<Subsystem> subs;
  if (has_control(spec)) subs.push_back(Subsystem{spec.control.control_dim(), {RoleKind::Control, 0, 0}});
  for (std::size_t k = 0; k < spec.q; ++k) {
    subs.push_back(Subsystem{spec.slot_radix, {RoleKind::TargetCopy, k, 0}});
    for (std::size_t s = 1; s < spec.d; ++s) {
      subs.push_back(Subsystem{spec.slot_radix, {RoleKind::Ancilla, k, s}});
    }
  }
  return subs;
}

// Basis permutation of the c-swap for `branch` (1-based) on `copy`: swap the
// copy's target slot with ancilla slot branch-1 wherever the control digit
// lies in the branch's basis set.
std::vector<std::uint32_t> cswap_permutation(const RegisterLayout& layout, const ForkSpec& spec,
                                             std::size_t branch, std::size_t copy) {
  const std::size_t sub_a = slot_subsystem(spec, copy, 0);
  const std::size_t sub_b = slot_subsystem(spec, copy, branch - 1);
  const std::size_t stride_a = layout.stride(sub_a);
  const std::size_t stride_b = layout.stride(sub_b);
  const std::size_t radix = layout.radix(sub_a);
  std::vector<bool> triggered(layout.radix(0), false);
  for (std::size_t b : spec.control.branch_set(branch - 1)) triggered[b] = true;

  std::vector<std::uint32_t> perm(layout.dim());
  for (std::size_t i = 0; i < layout.dim(); ++i) {
    const std::size_t c = layout.digit(i, 0);
    if (!triggered[c]) {
      perm[i] = static_cast<std::uint32_t>(i);
      continue;
    }
    const std::size_t da = idx::digit_of(i, stride_a, radix);
    const std::size_t db = idx::digit_of(i, stride_b, radix);
    const std::size_t swapped = i - da * stride_a - db * stride_b + db * stride_a + da * stride_b;
    perm[i] = static_cast<std::uint32_t>(swapped);
  }
  return perm;
}

struct SwapStep {
  std::size_t branch;
  std::size_t copy;
};

std::vector<SwapStep> fork_sequence(const ForkSpec& spec) {
  std::vector<SwapStep> steps;
  for (std::size_t branch = 2; branch <= spec.d; ++branch) {
    for (std::size_t copy = 0; copy < spec.q; ++copy) {
      steps.push_back(SwapStep{branch, copy});
    }
  }
  return steps;
}

Observable target_observable(const ForkSpec& spec) {
  const auto& em = std::get<ExpectationMeasurement>(spec.measurement);
  return Observable{em.observable, target_subsystems(spec)};
}

}  // namespace

std::size_t slot_subsystem(const ForkSpec& spec, std::size_t copy, std::size_t slot) {
  const std::size_t offset = has_control(spec) ? 1 : 0;
  return offset + copy * spec.d + slot;
}

std::vector<std::size_t> target_subsystems(const ForkSpec& spec) {
  std::vector<std::size_t> subs;
  subs.reserve(spec.q);
  for (std::size_t k = 0; k < spec.q; ++k) subs.push_back(slot_subsystem(spec, k, 0));
  return subs;
}

QuantumState build_register(const ForkSpec& spec) {
  spec.validate();
  const auto factors = register_factors(spec);
  bool any_mixed = spec.control.is_mixed_weights();
  for (const QuantumState* f : factors) any_mixed = any_mixed || f->is_density();

  RegisterLayout layout(register_subsystems(spec));
  if (!any_mixed) {
    ComplexVector amps;
    if (has_control(spec)) {
      amps = control_state(spec).amplitudes();
    } else {
      amps = ComplexVector{Complex{1.0, 0.0}};
    }
    for (const QuantumState* f : factors) amps = kron(amps, f->amplitudes());
    return QuantumState::pure(std::move(layout), std::move(amps));
  }

  ComplexMatrix rho;
  if (has_control(spec)) {
    rho = control_state(spec).to_density().density_matrix();
  } else {
    rho = ComplexMatrix::identity(1);
  }
  for (const QuantumState* f : factors) rho = kron(rho, f->to_density().density_matrix());
  return QuantumState::density(std::move(layout), std::move(rho));
}

QuantumState fork(QuantumState state, const ForkSpec& spec) {
  for (const SwapStep& step : fork_sequence(spec)) {
    state = state.permute_basis(cswap_permutation(state.layout(), spec, step.branch, step.copy));
  }
  return state;
}

QuantumState unfork(QuantumState state, const ForkSpec& spec) {
  const auto steps = fork_sequence(spec);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    state = state.permute_basis(cswap_permutation(state.layout(), spec, it->branch, it->copy));
  }
  return state;
}

QuantumState apply_pipelines(QuantumState state, const ForkSpec& spec) {
  for (std::size_t copy = 0; copy < spec.q; ++copy) {
    for (std::size_t slot = 0; slot < spec.d; ++slot) {
      const std::size_t sub = slot_subsystem(spec, copy, slot);
      for (const Channel& ch : spec.pipelines[copy][slot]) {
        if (state.is_pure() && ch.is_single_unitary() &&
            is_unitary(ch.kraus_ops().front(), tol::structural)) {
          state = state.apply_unitary(ch.kraus_ops().front(), {sub});
        } else {
          state = state.apply_channel(ch, {sub});
        }
      }
    }
  }
  return state;
}

double measure(const QuantumState& state, const ForkSpec& spec) {
  if (std::holds_alternative<ExpectationMeasurement>(spec.measurement)) {
    return state.expectation(target_observable(spec));
  }
  const auto& pm = std::get<ProjectiveMeasurement>(spec.measurement);
  ComplexMatrix joint = pm.projectors.front();
  for (std::size_t k = 1; k < pm.projectors.size(); ++k) joint = kron(joint, pm.projectors[k]);
  return state.projective_probability(Projector{std::move(joint), target_subsystems(spec)});
}

RunResult run(const ForkSpec& spec) {
  QuantumState state = build_register(spec);
  state = fork(std::move(state), spec);
  state = apply_pipelines(std::move(state), spec);
  state = unfork(std::move(state), spec);
  const double value = measure(state, spec);
  return RunResult{value, ir_for(spec), std::move(state)};
}

EstimateResult run_sampled(const ForkSpec& spec, std::size_t shots, std::uint64_t seed) {
  if (!std::holds_alternative<ExpectationMeasurement>(spec.measurement)) {
    throw validation_error("run_sampled requires an expectation measurement");
  }
  if (shots < 1) throw validation_error("run_sampled: shots must be at least 1");
  const RunResult exact = run(spec);
  const auto outcomes = exact.final_state.born_sample(target_observable(spec), shots, seed);

  double mean = 0.0;
  for (double o : outcomes) mean += o;
  mean /= static_cast<double>(outcomes.size());
  double var = 0.0;
  for (double o : outcomes) var += (o - mean) * (o - mean);
  var = outcomes.size() > 1 ? var / static_cast<double>(outcomes.size() - 1) : 0.0;

  EstimateResult result;
  result.mean = mean;
  result.shots = shots;
  result.seed = seed;
  result.prep_count = shots;
  result.std_error = std::sqrt(var / static_cast<double>(outcomes.size()));
  return result;
}

}  // namespace qfs
