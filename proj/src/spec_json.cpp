#include "qfs/spec_json.hpp"

#include <fstream>

#include "qfs/errors.hpp"
#include "qfs/format.hpp"
#include "qfs/gates.hpp"

namespace qfs {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw validation_error("spec json: field '" + field + "' " + why);
}

const json& require(const json& j, const std::string& field) {
  if (!j.contains(field)) fail(field, "is missing");
  return j.at(field);
}

double require_number(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_number()) fail(field, "must be a number");
  return v.get<double>();
}

std::size_t require_count(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) fail(field, "must be a positive integer");
  return v.get<std::size_t>();
}

Complex complex_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(field, "entries must be [re, im] pairs");
  }
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

ComplexVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "must be a nonempty array");
  ComplexVector v;
  v.reserve(j.size());
  for (const json& e : j) v.push_back(complex_from_json(e, field));
  return v;
}

QuantumState state_from_json(const json& j, std::size_t slot_radix, const std::string& field) {
  if (!j.is_object()) fail(field, "must be an object");
  const std::string kind = require(j, "kind").get<std::string>();
  const RegisterLayout layout = RegisterLayout::single(slot_radix);
  if (kind == "pure") {
    return QuantumState::pure(layout, vector_from_json(require(j, "amplitudes"), field + ".amplitudes"));
  }
  if (kind == "density") {
    return QuantumState::density(layout, matrix_from_json(require(j, "matrix")));
  }
  if (kind == "basis") {
    return QuantumState::basis(layout, require(j, "index").get<std::size_t>());
  }
  fail(field + ".kind", "must be pure, density or basis");
}

ComplexMatrix pauli_string_matrix(const std::string& s) {
  if (s.empty()) throw validation_error("spec json: empty pauli string");
  ComplexMatrix m = ComplexMatrix::identity(1);
  for (char c : s) m = kron(m, gates::pauli(c));
  return m;
}

ControlSpec control_from_json(const json& j) {
  if (!j.is_object()) fail("control", "must be an object");
  const std::string variant = require(j, "variant").get<std::string>();
  if (variant == "pure" || variant == "mixed") {
    const json& w = require(j, "weights");
    if (!w.is_array() || w.empty()) fail("control.weights", "must be a nonempty array");
    std::vector<double> weights;
    for (const json& e : w) {
      if (!e.is_number()) fail("control.weights", "must contain numbers");
      weights.push_back(e.get<double>());
    }
    return variant == "pure" ? ControlSpec::pure_weights(std::move(weights))
                             : ControlSpec::mixed_weights(std::move(weights));
  }
  if (variant == "encoded") {
    const ComplexMatrix prep = matrix_from_json(require(j, "prep_unitary"));
    const json& sets = require(j, "branch_sets");
    if (!sets.is_array() || sets.empty()) fail("control.branch_sets", "must be a nonempty array");
    std::vector<std::vector<std::size_t>> branch_sets;
    for (const json& set : sets) {
      if (!set.is_array()) fail("control.branch_sets", "must contain arrays of basis indices");
      std::vector<std::size_t> indices;
      for (const json& b : set) indices.push_back(b.get<std::size_t>());
      branch_sets.push_back(std::move(indices));
    }
    return ControlSpec::encoded(prep, std::move(branch_sets));
  }
  fail("control.variant", "must be pure, mixed or encoded");
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw validation_error("spec json: matrix must be a nonempty row array");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw validation_error("spec json: matrix rows must be nonempty arrays");
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) throw validation_error("spec json: ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[c], "matrix");
    }
  }
  if (!is_finite(m)) throw validation_error("spec json: matrix entries must be finite");
  return m;
}

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back({round_sig12(m(r, c).real()), round_sig12(m(r, c).imag())});
    }
    rows.push_back(row);
  }
  return rows;
}

Channel channel_from_json(const json& j, std::size_t slot_radix) {
  if (!j.is_object()) throw validation_error("spec json: channel must be an object");
  if (j.contains("kraus")) {
    const json& list = j.at("kraus");
    if (!list.is_array() || list.empty()) fail("kraus", "must be a nonempty array of matrices");
    std::vector<ComplexMatrix> kraus;
    for (const json& k : list) kraus.push_back(matrix_from_json(k));
    return Channel(std::move(kraus));
  }
  const std::string name = require(j, "name").get<std::string>();
  const auto param = [&] { return require_number(j, "param"); };
  if (name == "identity") return identity_channel(slot_radix);
  if (name == "x") return unitary_channel(gates::sigma_x(), "x");
  if (name == "y") return unitary_channel(gates::sigma_y(), "y");
  if (name == "z") return unitary_channel(gates::sigma_z(), "z");
  if (name == "h") return unitary_channel(gates::hadamard(), "h");
  if (name == "s") return unitary_channel(gates::s_gate(), "s");
  if (name == "sdg") return unitary_channel(gates::s_dagger(), "sdg");
  if (name == "rx") return unitary_channel(gates::rx(param()), "rx(" + format_sig12(param()) + ")");
  if (name == "ry") return unitary_channel(gates::ry(param()), "ry(" + format_sig12(param()) + ")");
  if (name == "rz") return unitary_channel(gates::rz(param()), "rz(" + format_sig12(param()) + ")");
  if (name == "dephasing") return dephasing(param());
  if (name == "depolarizing") return depolarizing(param());
  if (name == "amplitude_damping") return amplitude_damping(param());
  if (name == "unitary") return unitary_channel(matrix_from_json(require(j, "matrix")));
  throw validation_error("spec json: unknown channel name '" + name + "'");
}

ForkSpec fork_spec_from_json(const json& j) {
  if (!j.is_object()) throw validation_error("spec json: document must be an object");
  ForkSpec spec;
  spec.d = require_count(j, "d");
  spec.q = require_count(j, "q");
  spec.slot_radix = require_count(j, "slot_radix");
  spec.control = control_from_json(require(j, "control"));
  spec.target_state = state_from_json(require(j, "target_state"), spec.slot_radix, "target_state");

  if (j.contains("ancilla_states")) {
    const json& list = j.at("ancilla_states");
    if (!list.is_array()) fail("ancilla_states", "must be an array");
    std::size_t index = 0;
    for (const json& s : list) {
      spec.ancilla_states.push_back(
          state_from_json(s, spec.slot_radix, "ancilla_states[" + std::to_string(index++) + "]"));
    }
  } else {
    spec.ancilla_states = ForkSpec::default_ancillas(spec.d, spec.q, spec.slot_radix);
  }

  spec.pipelines = ForkSpec::empty_pipelines(spec.d, spec.q);
  if (j.contains("pipelines")) {
    const json& list = j.at("pipelines");
    if (!list.is_array()) fail("pipelines", "must be an array");
    for (const json& entry : list) {
      const std::size_t copy = require(entry, "copy").get<std::size_t>();
      const std::size_t slot = require(entry, "slot").get<std::size_t>();
      if (copy >= spec.q) fail("pipelines.copy", "out of range");
      if (slot >= spec.d) fail("pipelines.slot", "out of range");
      const json& channels = require(entry, "channels");
      if (!channels.is_array()) fail("pipelines.channels", "must be an array");
      for (const json& ch : channels) {
        spec.pipelines[copy][slot].push_back(channel_from_json(ch, spec.slot_radix));
      }
    }
  }

  const json& meas = require(j, "measurement");
  const std::string kind = require(meas, "kind").get<std::string>();
  if (kind == "expectation") {
    ComplexMatrix obs;
    if (meas.contains("pauli")) {
      obs = pauli_string_matrix(meas.at("pauli").get<std::string>());
    } else {
      obs = matrix_from_json(require(meas, "observable"));
    }
    spec.measurement = ExpectationMeasurement{std::move(obs)};
  } else if (kind == "projective") {
    const json& list = require(meas, "projectors");
    if (!list.is_array()) fail("measurement.projectors", "must be an array");
    ProjectiveMeasurement pm;
    for (const json& p : list) pm.projectors.push_back(matrix_from_json(p));
    spec.measurement = std::move(pm);
  } else {
    fail("measurement.kind", "must be expectation or projective");
  }

  spec.validate();
  return spec;
}

ForkSpec load_fork_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open spec file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw validation_error("spec json: parse error in '" + path + "': " + e.what());
  }
  return fork_spec_from_json(j);
}

nlohmann::ordered_json witness_report_to_json(const WitnessReport& report) {
  nlohmann::ordered_json j;
  j["qfs_measured"] = round_sig12(report.qfs_measured);
  j["witness_value"] = round_sig12(report.witness_value);
  j["entangled_flag"] = report.entangled_flag;
  return j;
}

nlohmann::ordered_json purity_report_to_json(const PurityReport& report) {
  nlohmann::ordered_json j;
  j["qfs_measured"] = round_sig12(report.qfs_measured);
  j["purity_sum"] = round_sig12(report.purity_sum);
  j["trace_purity"] = round_sig12(report.trace_purity);
  return j;
}

}  // namespace qfs
