#include "qfs/circuit_ir.hpp"

namespace qfs {

namespace {

const char* role_name(RoleKind kind) {
  switch (kind) {
    case RoleKind::Control:
      return "control";
    case RoleKind::TargetCopy:
      return "target";
    case RoleKind::Ancilla:
      return "ancilla";
    default:
      return "data";
  }
}

std::vector<Subsystem> register_subsystems(const ForkSpec& spec) {
  std::vector<Subsystem> subs;
  const std::size_t control_dim = spec.control.control_dim();
  if (control_dim >= 2) subs.push_back(Subsystem{control_dim, {RoleKind::Control, 0, 0}});
  for (std::size_t k = 0; k < spec.q; ++k) {
    subs.push_back(Subsystem{spec.slot_radix, {RoleKind::TargetCopy, k, 0}});
    for (std::size_t s = 1; s < spec.d; ++s) {
      subs.push_back(Subsystem{spec.slot_radix, {RoleKind::Ancilla, k, s}});
    }
  }
  return subs;
}

}  // namespace

CircuitIR ir_for(const ForkSpec& spec) {
  spec.validate();
  CircuitIR ir;
  ir.d = spec.d;
  ir.q = spec.q;
  ir.control_dim = spec.control.control_dim() >= 2 ? spec.control.control_dim() : 0;
  ir.slot_radix = spec.slot_radix;
  ir.subsystems = register_subsystems(spec);

  if (ir.control_dim > 0) {
    ir.ops.push_back(IrOp{IrOp::Kind::PrepareControl, 0, 0, 0, "", ""});
  }
  std::vector<IrOp> forward;
  for (std::size_t branch = 2; branch <= spec.d; ++branch) {
    for (std::size_t copy = 0; copy < spec.q; ++copy) {
      forward.push_back(IrOp{IrOp::Kind::CSwap, branch, copy, 0, "", ""});
    }
  }
  for (const IrOp& op : forward) ir.ops.push_back(op);
  for (std::size_t copy = 0; copy < spec.q; ++copy) {
    for (std::size_t slot = 0; slot < spec.d; ++slot) {
      for (const Channel& ch : spec.pipelines[copy][slot]) {
        ir.ops.push_back(IrOp{IrOp::Kind::ApplyChannel, 0, copy, slot, ch.label(), ""});
      }
    }
  }
  for (auto it = forward.rbegin(); it != forward.rend(); ++it) ir.ops.push_back(*it);
  ir.ops.push_back(IrOp{IrOp::Kind::Measure, 0, 0, 0, "",
                        std::holds_alternative<ExpectationMeasurement>(spec.measurement) ? "expectation"
                                                                                         : "projective"});
  ir.cswap_count = 2 * forward.size();
  return ir;
}

nlohmann::ordered_json CircuitIR::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json layout;
  layout["d"] = d;
  layout["q"] = q;
  layout["control_dim"] = control_dim;
  layout["slot_radix"] = slot_radix;
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (const Subsystem& s : subsystems) {
    nlohmann::ordered_json entry;
    entry["radix"] = s.radix;
    entry["role"] = role_name(s.role.kind);
    if (s.role.kind == RoleKind::TargetCopy || s.role.kind == RoleKind::Ancilla) {
      entry["copy"] = s.role.copy;
    }
    if (s.role.kind == RoleKind::Ancilla) entry["slot"] = s.role.slot;
    subs.push_back(entry);
  }
  layout["subsystems"] = subs;
  j["layout"] = layout;

  nlohmann::ordered_json ops = nlohmann::ordered_json::array();
  for (const IrOp& op : this->ops) {
    nlohmann::ordered_json entry;
    switch (op.kind) {
      case IrOp::Kind::PrepareControl:
        entry["kind"] = "prepare_control";
        break;
      case IrOp::Kind::CSwap:
        entry["kind"] = "cswap";
        entry["branch"] = op.branch;
        entry["copy"] = op.copy;
        break;
      case IrOp::Kind::ApplyChannel:
        entry["kind"] = "apply_channel";
        entry["copy"] = op.copy;
        entry["slot"] = op.slot;
        entry["channel_id"] = op.channel_id;
        break;
      case IrOp::Kind::Measure:
        entry["kind"] = "measure";
        entry["measure"] = op.measure_kind;
        break;
    }
    ops.push_back(entry);
  }
  j["ops"] = ops;
  j["cswap_count"] = cswap_count;
  return j;
}

}  // namespace qfs
