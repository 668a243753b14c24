#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfs/fork_spec.hpp"

namespace qfs {

struct IrOp {
  enum class Kind { PrepareControl, CSwap, ApplyChannel, Measure };
  Kind kind = Kind::PrepareControl;
  std::size_t branch = 0;  // CSwap: 1-based branch index (2..d)
  std::size_t copy = 0;    // CSwap / ApplyChannel
  std::size_t slot = 0;    // ApplyChannel: slot index within the copy
  std::string channel_id;  // ApplyChannel
  std::string measure_kind;  // Measure: "expectation" | "projective"
};

/// Flat record of one forking circuit: control preparation, the forking
/// c-swap ladder (branches ascending), the per-slot channel pipelines, the
/// unforking ladder (exact reverse), and the final measurement.
struct CircuitIR {
  std::size_t d = 1;
  std::size_t q = 1;
  std::size_t control_dim = 0;  // 0 when the control subsystem is omitted (d = 1)
  std::size_t slot_radix = 2;
  std::vector<Subsystem> subsystems;
  std::vector<IrOp> ops;
  std::size_t cswap_count = 0;

  nlohmann::ordered_json to_json() const;
};

CircuitIR ir_for(const ForkSpec& spec);

}  // namespace qfs
