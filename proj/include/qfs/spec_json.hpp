#pragma once

#include <string>

#include <json.hpp>

#include "qfs/fork_spec.hpp"
#include "qfs/protocols.hpp"

namespace qfs {

// JSON schema for fork specs. Complex scalars are [re, im] pairs; matrices are
// row arrays of such pairs. Channels come from the named registry
// (identity, x, y, z, h, s, sdg, rx/ry/rz with "param", dephasing,
// depolarizing, amplitude_damping, unitary with "matrix") or as raw Kraus
// lists under "kraus".

ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);

Channel channel_from_json(const nlohmann::json& j, std::size_t slot_radix);

ForkSpec fork_spec_from_json(const nlohmann::json& j);
ForkSpec load_fork_spec(const std::string& path);

nlohmann::ordered_json witness_report_to_json(const WitnessReport& report);
nlohmann::ordered_json purity_report_to_json(const PurityReport& report);

}  // namespace qfs
