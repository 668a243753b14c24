// End-to-end checks of the command-line tool: output schemas, golden-value
// spot checks, run-to-run byte identity and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

const std::string kCli = QFS_CLI_PATH;
const std::string kConfigDir = QFS_CONFIG_DIR;
const std::string kWorkDir = "/tmp/qfs_cli_tests";

int run_cli(const std::string& args) {
  const int status = std::system((kCli + " " + args + " 2>/dev/null").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

struct Setup {
  Setup() { std::system(("mkdir -p " + kWorkDir).c_str()); }
};
const Setup setup;

}  // namespace

TEST_CASE("axis sweep along z is the constant half") {
  const std::string out = kWorkDir + "/axis_z.csv";
  REQUIRE(run_cli("axis-sweep --axis z --steps 17 -o " + out) == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 18);
  CHECK(rows[0] == std::vector<std::string>{"theta", "exact", "theory"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][1] == "0.5");
    CHECK(rows[i][2] == "0.5");
  }
}

TEST_CASE("axis sweep exact column tracks theory rowwise") {
  const std::string out = kWorkDir + "/axis_x.csv";
  REQUIRE(run_cli("axis-sweep --axis x --steps 17 -o " + out) == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 18);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double exact = std::strtod(rows[i][1].c_str(), nullptr);
    const double theory = std::strtod(rows[i][2].c_str(), nullptr);
    CHECK(std::abs(exact - theory) <= 1e-9);
  }
}

TEST_CASE("sampled axis sweep stays near theory and repeats byte-for-byte") {
  const std::string a = kWorkDir + "/axis_y_a.csv";
  const std::string b = kWorkDir + "/axis_y_b.csv";
  const std::string args = "axis-sweep --axis y --steps 17 --shots 8192 --seed 5 ";
  REQUIRE(run_cli(args + "-o " + a) == 0);
  REQUIRE(run_cli(args + "-o " + b) == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(!text.empty());

  const auto rows = parse_csv(text);
  REQUIRE(rows.size() == 18);
  CHECK(rows[0] == std::vector<std::string>{"theta", "exact", "sampled", "theory"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double sampled = std::strtod(rows[i][2].c_str(), nullptr);
    const double theory = std::strtod(rows[i][3].c_str(), nullptr);
    CHECK(std::abs(sampled - theory) <= 5.0 / std::sqrt(8192.0));
  }
}

TEST_CASE("sweep directions reorder the grid") {
  const std::string up = kWorkDir + "/dir_up.csv";
  const std::string down = kWorkDir + "/dir_down.csv";
  const std::string shuffled = kWorkDir + "/dir_rand.csv";
  REQUIRE(run_cli("axis-sweep --axis z --steps 5 --direction up -o " + up) == 0);
  REQUIRE(run_cli("axis-sweep --axis z --steps 5 --direction down -o " + down) == 0);
  REQUIRE(run_cli("axis-sweep --axis z --steps 5 --direction random --seed 9 -o " + shuffled) == 0);
  const auto u = parse_csv(slurp(up));
  const auto d = parse_csv(slurp(down));
  const auto r = parse_csv(slurp(shuffled));
  CHECK(u[1][0] == "0");
  CHECK(d[1][0] == u[5][0]);  // descending starts at 2pi
  // Same theta multiset in all three orders.
  auto thetas = [](const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::string> t;
    for (std::size_t i = 1; i < rows.size(); ++i) t.push_back(rows[i][0]);
    std::sort(t.begin(), t.end());
    return t;
  };
  CHECK(thetas(u) == thetas(d));
  CHECK(thetas(u) == thetas(r));
}

TEST_CASE("witness command reports the named states") {
  const std::string out = kWorkDir + "/witness.json";
  REQUIRE(run_cli("witness --state phi+ -o " + out) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["witness_value"].get<double>() == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(j["entangled_flag"].get<bool>());

  REQUIRE(run_cli("witness --state 00 -o " + out) == 0);
  j = nlohmann::json::parse(slurp(out));
  CHECK(j["witness_value"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK_FALSE(j["entangled_flag"].get<bool>());

  REQUIRE(run_cli("witness --state psi- -o " + out) == 0);
  j = nlohmann::json::parse(slurp(out));
  CHECK(j["witness_value"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("purity command") {
  const std::string out = kWorkDir + "/purity.json";
  REQUIRE(run_cli("purity --channel identity --mode qutrit -o " + out) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["purity_sum"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  REQUIRE(run_cli("purity --channel depolarizing:0.4 --mode encoded -o " + out) == 0);
  j = nlohmann::json::parse(slurp(out));
  CHECK(j["purity_sum"].get<double>() == doctest::Approx(0.36).epsilon(1e-9));
  CHECK(j["trace_purity"].get<double>() ==
        doctest::Approx((1.0 + 0.36) / 2.0).epsilon(1e-9));
}

TEST_CASE("twirl command agrees with the direct average") {
  const std::string out = kWorkDir + "/twirl.json";
  REQUIRE(run_cli("twirl --set pauli --inner amplitude_damping:0.5 --state plus -o " + out) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["abs_diff"].get<double>() <= 1e-9);
}

TEST_CASE("run-spec executes the bundled examples") {
  const std::string out = kWorkDir + "/spec.json";
  REQUIRE(run_cli("run-spec " + kConfigDir + "/linear_sum.json -o " + out) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["cswap_count"].get<int>() == 2);
  CHECK(j["ir"]["ops"][0]["kind"] == "prepare_control");

  REQUIRE(run_cli("run-spec " + kConfigDir + "/quadratic_sum.json -o " + out) == 0);
  j = nlohmann::json::parse(slurp(out));
  CHECK(j["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["cswap_count"].get<int>() == 4);
}

TEST_CASE("complexity command emits the documented CSV") {
  const std::string out = kWorkDir + "/complexity.csv";
  REQUIRE(run_cli("complexity --epsilons 0.3,0.2 --delta 0.2 --seed 3 -o " + out) == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"epsilon", "naive_preps", "qfs_preps", "ratio"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::strtod(rows[i][3].c_str(), nullptr) > 0.0);
  }
}

TEST_CASE("validation failures exit with code 2") {
  CHECK(run_cli("axis-sweep --axis w --steps 17") == 2);
  CHECK(run_cli("axis-sweep --axis x --steps 1") == 2);
  CHECK(run_cli("witness --state nonsense") == 2);
  CHECK(run_cli("run-spec /nonexistent/file.json") == 2);
  CHECK(run_cli("purity --channel dephasing:1.5") == 2);
  CHECK(run_cli("no-such-command") == 2);
}

TEST_CASE("dimension-cap violations exit with code 3") {
  const int status = std::system(
      ("QFS_MAX_DENSITY_DIM=4 " + kCli + " purity --channel depolarizing:0.4 2>/dev/null").c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  CHECK(code == 3);
}

TEST_CASE("environment overrides can raise the caps too") {
  // Two-qubit encoded purity control needs density dimension 256; a lowered
  // cap rejects it and a raised cap admits it again.
  const std::string ok = kCli + " purity --channel dephasing:0.2 --mode encoded 2>/dev/null >/dev/null";
  int status = std::system(("QFS_MAX_DENSITY_DIM=128 " + ok).c_str());
  CHECK((WIFEXITED(status) ? WEXITSTATUS(status) : -1) == 3);
  status = std::system(("QFS_MAX_DENSITY_DIM=256 " + ok).c_str());
  CHECK((WIFEXITED(status) ? WEXITSTATUS(status) : -1) == 0);
}
