// Command-line front end: axis sweeps, witness/purity/twirl reports, raw spec
// execution and the preparation-cost sweep. Every command is deterministic
// given its full flag set including the seed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qfs/circuit_ir.hpp"
#include "qfs/config.hpp"
#include "qfs/engine.hpp"
#include "qfs/errors.hpp"
#include "qfs/format.hpp"
#include "qfs/gates.hpp"
#include "qfs/oracle.hpp"
#include "qfs/protocols.hpp"
#include "qfs/random_states.hpp"
#include "qfs/rng.hpp"
#include "qfs/sampling.hpp"
#include "qfs/spec_json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitDimensionCap = 3;

void apply_env_caps() {
  if (const char* v = std::getenv("QFS_MAX_PURE_DIM")) {
    const long parsed = std::strtol(v, nullptr, 10);
    if (parsed <= 0) throw qfs::validation_error("QFS_MAX_PURE_DIM must be a positive integer");
    qfs::caps().max_pure_dim = static_cast<std::size_t>(parsed);
  }
  if (const char* v = std::getenv("QFS_MAX_DENSITY_DIM")) {
    const long parsed = std::strtol(v, nullptr, 10);
    if (parsed <= 0) throw qfs::validation_error("QFS_MAX_DENSITY_DIM must be a positive integer");
    qfs::caps().max_density_dim = static_cast<std::size_t>(parsed);
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qfs::validation_error("cannot open output file '" + path + "'");
  out << content;
}

// name[:param] -> channel
qfs::Channel channel_from_flag(const std::string& flag) {
  const auto colon = flag.find(':');
  const std::string name = flag.substr(0, colon);
  const bool has_param = colon != std::string::npos;
  const auto param = [&] {
    if (!has_param) throw qfs::validation_error("channel '" + name + "' needs a parameter, e.g. " + name + ":0.3");
    return std::strtod(flag.c_str() + colon + 1, nullptr);
  };
  if (name == "identity") return qfs::identity_channel(2);
  if (name == "dephasing") return qfs::dephasing(param());
  if (name == "depolarizing") return qfs::depolarizing(param());
  if (name == "amplitude_damping") return qfs::amplitude_damping(param());
  if (name == "x") return qfs::unitary_channel(qfs::gates::sigma_x(), "x");
  if (name == "y") return qfs::unitary_channel(qfs::gates::sigma_y(), "y");
  if (name == "z") return qfs::unitary_channel(qfs::gates::sigma_z(), "z");
  if (name == "h") return qfs::unitary_channel(qfs::gates::hadamard(), "h");
  if (name == "rx") return qfs::unitary_channel(qfs::gates::rx(param()), "rx");
  if (name == "ry") return qfs::unitary_channel(qfs::gates::ry(param()), "ry");
  if (name == "rz") return qfs::unitary_channel(qfs::gates::rz(param()), "rz");
  throw qfs::validation_error("unknown channel '" + name + "'");
}

// Named single-qubit states for purity/twirl inputs.
qfs::QuantumState qubit_state_from_flag(const std::string& flag) {
  const qfs::RegisterLayout layout = qfs::RegisterLayout::single(2);
  const double s = 1.0 / std::sqrt(2.0);
  if (flag == "zero") return qfs::QuantumState::basis(layout, 0);
  if (flag == "one") return qfs::QuantumState::basis(layout, 1);
  if (flag == "plus") return qfs::QuantumState::pure(layout, {s, s});
  if (flag == "minus") return qfs::QuantumState::pure(layout, {s, -s});
  if (flag == "mixed") {
    return qfs::QuantumState::density(layout, qfs::scale(0.5, qfs::ComplexMatrix::identity(2)));
  }
  if (flag.rfind("random:", 0) == 0) {
    const std::uint64_t seed = std::strtoull(flag.c_str() + 7, nullptr, 10);
    qfs::Rng rng = qfs::make_rng({seed, 0x51A7E});
    return qfs::QuantumState::pure(layout, qfs::random_pure(2, rng));
  }
  throw qfs::validation_error("unknown state '" + flag + "'");
}

qfs::QuantumState witness_state_from_flag(const std::string& flag) {
  const qfs::RegisterLayout layout = qfs::RegisterLayout::single(4);
  const double s = 1.0 / std::sqrt(2.0);
  if (flag == "phi+") return qfs::QuantumState::pure(layout, {s, 0.0, 0.0, s});
  if (flag == "psi-") return qfs::QuantumState::pure(layout, {0.0, s, -s, 0.0});
  if (flag == "00") return qfs::QuantumState::basis(layout, 0);
  if (flag.rfind("random:", 0) == 0) {
    const std::uint64_t seed = std::strtoull(flag.c_str() + 7, nullptr, 10);
    qfs::Rng rng = qfs::make_rng({seed, 0x817E55});
    return qfs::QuantumState::pure(layout, qfs::random_pure(4, rng));
  }
  throw qfs::validation_error("unknown witness state '" + flag + "' (phi+, psi-, 00 or random:SEED)");
}

std::vector<double> theta_grid(std::size_t steps) {
  std::vector<double> grid;
  grid.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    grid.push_back(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return grid;
}

int cmd_axis_sweep(const std::string& axis_name, std::size_t steps, std::size_t shots, std::uint64_t seed,
                   const std::string& direction, const std::string& output) {
  const qfs::RotationAxis axis = qfs::axis_from_name(axis_name);
  if (steps < 2) throw qfs::validation_error("axis sweep needs at least 2 steps");
  std::vector<double> grid = theta_grid(steps);
  if (direction == "down") {
    std::reverse(grid.begin(), grid.end());
  } else if (direction == "random") {
    // Seeded Fisher-Yates shuffle of the grid order.
    qfs::Rng rng = qfs::make_rng({seed, 0x5F0FF7E});
    for (std::size_t i = grid.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(qfs::uniform01(rng) * static_cast<double>(i));
      std::swap(grid[i - 1], grid[j < i ? j : i - 1]);
    }
  } else if (direction != "up") {
    throw qfs::validation_error("direction must be up, down or random");
  }

  std::ostringstream csv;
  csv << (shots > 0 ? "theta,exact,sampled,theory\n" : "theta,exact,theory\n");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double theta = grid[i];
    const qfs::ForkSpec spec = qfs::make_axis_spec(axis, theta);
    const double exact = qfs::run(spec).value;
    csv << qfs::format_sig12(theta) << ',' << qfs::format_sig12(exact);
    if (shots > 0) {
      const qfs::EstimateResult est = qfs::run_sampled(spec, shots, qfs::mix_seed({seed, i}));
      csv << ',' << qfs::format_sig12(est.mean);
    }
    csv << ',' << qfs::format_sig12(qfs::theory_value(axis, theta)) << '\n';
  }
  write_output(output, csv.str());
  return kExitOk;
}

int cmd_witness(const std::string& state_flag, const std::string& output) {
  const qfs::QuantumState state = witness_state_from_flag(state_flag);
  const qfs::WitnessReport report = qfs::teleportation_witness(state);
  nlohmann::ordered_json j = qfs::witness_report_to_json(report);
  j["state"] = state_flag;
  write_output(output, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_purity(const std::string& channel_flag, const std::string& mode, const std::string& state_flag,
               const std::string& output) {
  const qfs::Channel inner = channel_from_flag(channel_flag);
  const qfs::QuantumState state = qubit_state_from_flag(state_flag);
  qfs::PurityControlMode control_mode;
  if (mode == "qutrit") {
    control_mode = qfs::PurityControlMode::Qutrit;
  } else if (mode == "encoded") {
    control_mode = qfs::PurityControlMode::TwoQubitEncoded;
  } else {
    throw qfs::validation_error("purity mode must be qutrit or encoded");
  }
  const qfs::PurityReport report = qfs::purity_benchmark(inner, state, control_mode);
  nlohmann::ordered_json j = qfs::purity_report_to_json(report);
  j["channel"] = channel_flag;
  j["mode"] = mode;
  j["state"] = state_flag;
  write_output(output, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_twirl(const std::string& set_flag, const std::string& inner_flag, const std::string& state_flag,
              const std::string& obs_flag, std::uint64_t seed, const std::string& output) {
  std::vector<qfs::ComplexMatrix> twirl_set;
  if (set_flag == "pauli") {
    twirl_set = {qfs::gates::identity2(), qfs::gates::sigma_x(), qfs::gates::sigma_y(),
                 qfs::gates::sigma_z()};
  } else if (set_flag.rfind("random:", 0) == 0) {
    const std::size_t count = std::strtoull(set_flag.c_str() + 7, nullptr, 10);
    if (count == 0) throw qfs::validation_error("random twirl set needs a positive count");
    qfs::Rng rng = qfs::make_rng({seed, 0x7712});
    for (std::size_t i = 0; i < count; ++i) twirl_set.push_back(qfs::random_unitary(2, rng));
  } else {
    throw qfs::validation_error("twirl set must be pauli or random:COUNT");
  }
  const std::vector<double> weights(twirl_set.size(), 1.0 / static_cast<double>(twirl_set.size()));
  const qfs::Channel inner = channel_from_flag(inner_flag);
  const qfs::QuantumState state = qubit_state_from_flag(state_flag);
  const qfs::ComplexMatrix obs = qfs::gates::pauli(obs_flag.size() == 1 ? obs_flag[0] : '?');

  const double forked = qfs::twirled_expectation(twirl_set, weights, inner, obs, state);
  const qfs::ComplexMatrix averaged =
      qfs::oracle::twirl(twirl_set, weights, inner, state.to_density().density_matrix());
  const double direct = qfs::trace(qfs::matmul(obs, averaged)).real();

  nlohmann::ordered_json j;
  j["twirl_set"] = set_flag;
  j["inner"] = inner_flag;
  j["state"] = state_flag;
  j["observable"] = obs_flag;
  j["qfs_value"] = qfs::round_sig12(forked);
  j["direct_value"] = qfs::round_sig12(direct);
  j["abs_diff"] = qfs::round_sig12(std::abs(forked - direct));
  write_output(output, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_run_spec(const std::string& path, const std::string& output) {
  const qfs::ForkSpec spec = qfs::load_fork_spec(path);
  const qfs::RunResult result = qfs::run(spec);
  nlohmann::ordered_json j;
  j["value"] = qfs::round_sig12(result.value);
  j["cswap_count"] = result.ir.cswap_count;
  j["ir"] = result.ir.to_json();
  write_output(output, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_complexity(std::size_t d, const std::string& epsilons_flag, double delta, std::uint64_t seed,
                   const std::string& output) {
  std::vector<double> epsilons;
  std::stringstream ss(epsilons_flag);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    epsilons.push_back(std::strtod(item.c_str(), nullptr));
  }
  if (epsilons.empty()) throw qfs::validation_error("complexity: no epsilons given");

  qfs::ComplexityInstance instance = qfs::default_complexity_instance(seed);
  if (d != 4) {
    instance.d = d;
    instance.weights.assign(d, 1.0 / static_cast<double>(d));
    instance.channels.clear();
    qfs::Rng rng = qfs::make_rng({seed, 0x1157A9CEULL});
    for (std::size_t i = 0; i < d; ++i) {
      instance.channels.push_back(
          qfs::unitary_channel(qfs::random_unitary(2, rng), "random_u" + std::to_string(i + 1)));
    }
  }
  const qfs::ComplexityReport report = qfs::complexity_sweep(instance, epsilons, delta, seed);
  write_output(output, qfs::to_csv(report));
  return kExitOk;
}

}  // namespace

static int run_main(int argc, char** argv) {
  CLI::App app{"Quantum forking sampler: weighted power sums of expectation values from "
               "independent trajectories with one entangled register"};
  app.require_subcommand(1);

  std::string axis = "z", direction = "up", output;
  std::size_t steps = 17, shots = 0;
  std::uint64_t seed = 1;
  auto* sweep = app.add_subcommand("axis-sweep", "Axis-discrimination sweep (CSV)");
  sweep->add_option("--axis", axis, "Rotation axis: x, y or z")->required();
  sweep->add_option("--steps", steps, "Grid points over [0, 2pi]");
  sweep->add_option("--shots", shots, "Also sample with this many shots per point");
  sweep->add_option("--seed", seed, "Sampling seed");
  sweep->add_option("--direction", direction, "Sweep order: up, down or random");
  sweep->add_option("-o,--output", output, "Output file (default stdout)");

  std::string witness_state = "phi+";
  auto* witness = app.add_subcommand("witness", "Teleportation entanglement witness (JSON)");
  witness->add_option("--state", witness_state, "phi+, psi-, 00 or random:SEED")->required();
  witness->add_option("-o,--output", output, "Output file (default stdout)");

  std::string purity_channel = "identity", purity_mode = "qutrit", purity_state = "zero";
  auto* purity = app.add_subcommand("purity", "Single-qubit purity benchmark (JSON)");
  purity->add_option("--channel", purity_channel, "Channel name[:param]")->required();
  purity->add_option("--mode", purity_mode, "Control mode: qutrit or encoded");
  purity->add_option("--state", purity_state, "Input state name");
  purity->add_option("-o,--output", output, "Output file (default stdout)");

  std::string twirl_set = "pauli", twirl_inner = "identity", twirl_state = "zero", twirl_obs = "z";
  auto* twirl = app.add_subcommand("twirl", "Channel twirling vs direct averaging (JSON)");
  twirl->add_option("--set", twirl_set, "pauli or random:COUNT");
  twirl->add_option("--inner", twirl_inner, "Channel name[:param]")->required();
  twirl->add_option("--state", twirl_state, "Input state name");
  twirl->add_option("--obs", twirl_obs, "Observable: x, y or z");
  twirl->add_option("--seed", seed, "Seed for random twirl sets");
  twirl->add_option("-o,--output", output, "Output file (default stdout)");

  std::string spec_path;
  auto* run_spec = app.add_subcommand("run-spec", "Execute a fork spec JSON file");
  run_spec->add_option("path", spec_path, "Path to the spec JSON")->required();
  run_spec->add_option("-o,--output", output, "Output file (default stdout)");

  std::size_t complexity_d = 4;
  std::string epsilons = "0.2,0.15,0.1,0.07,0.05,0.035,0.025";
  double delta = 0.1;
  auto* complexity = app.add_subcommand("complexity", "Preparation-cost sweep (CSV)");
  complexity->add_option("--d", complexity_d, "Branch count of the test instance");
  complexity->add_option("--epsilons", epsilons, "Comma-separated accuracy targets");
  complexity->add_option("--delta", delta, "Allowed failure probability");
  complexity->add_option("--seed", seed, "Sweep seed");
  complexity->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
    apply_env_caps();
    if (sweep->parsed()) return cmd_axis_sweep(axis, steps, shots, seed, direction, output);
    if (witness->parsed()) return cmd_witness(witness_state, output);
    if (purity->parsed()) return cmd_purity(purity_channel, purity_mode, purity_state, output);
    if (twirl->parsed()) return cmd_twirl(twirl_set, twirl_inner, twirl_state, twirl_obs, seed, output);
    if (run_spec->parsed()) return cmd_run_spec(spec_path, output);
    if (complexity->parsed()) return cmd_complexity(complexity_d, epsilons, delta, seed, output);
    return kExitValidation;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const qfs::dimension_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimensionCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (...) {
    std::cerr << "error: unexpected failure\n";
    return kExitValidation;
  }
}
