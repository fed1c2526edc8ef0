#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hss/cli/commands.hpp"
#include "hss/cli/model_runner.hpp"

using hss::cli::cmd_compare;
using hss::cli::cmd_simulate;
using hss::cli::cmd_sweep;
using hss::cli::cmd_witness;
using hss::cli::ModelRunner;
using hss::cli::RunConfig;

namespace {

RunConfig strong_two_qubit(double t_max = 10.0, double dt = 1e-2) {
  RunConfig cfg;
  cfg.model = "two_qubit";
  cfg.params = {{"gamma0", "1"}, {"lambda", "1.25"}};
  cfg.t_max = t_max;
  cfg.dt = dt;
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_binary(const std::string& args, const std::string& out_file,
               const std::string& err_file) {
  const std::string cmd = std::string(HSS_CLI_PATH) + " " + args + " > " +
                          out_file + " 2> " + err_file;
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("simulate: header, column selection, determinism") {
  RunConfig cfg = strong_two_qubit(0.1, 1e-2);
  std::ostringstream a, b;
  CHECK(cmd_simulate(cfg, a) == 0);
  CHECK(cmd_simulate(cfg, b) == 0);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("t,hss,chi,trace_distance,sigma,P\n", 0) == 0);

  cfg.columns = {"t", "P"};
  std::ostringstream c;
  CHECK(cmd_simulate(cfg, c) == 0);
  CHECK(c.str().rfind("t,P\n", 0) == 0);
  std::istringstream lines(c.str());
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line == "0,1");

  cfg.columns = {"nope"};
  CHECK_THROWS_AS(cmd_simulate(cfg, c), hss::ConfigError);
}

TEST_CASE("config validation errors") {
  RunConfig cfg = strong_two_qubit();
  cfg.t_max = -1.0;
  std::ostringstream os;
  CHECK_THROWS_AS(cmd_simulate(cfg, os), hss::ConfigError);

  cfg = strong_two_qubit();
  cfg.params["bogus"] = "1";
  CHECK_THROWS_AS(cmd_simulate(cfg, os), hss::UnknownParameter);

  cfg = strong_two_qubit();
  cfg.params.erase("lambda");
  CHECK_THROWS_AS(cmd_simulate(cfg, os), hss::ConfigError);

  cfg = strong_two_qubit();
  cfg.phi_spec = "grid:8";
  CHECK_THROWS_AS(cmd_simulate(cfg, os), hss::ConfigError);

  cfg = strong_two_qubit();
  cfg.model = "unknown_model";
  CHECK_THROWS_AS(cmd_simulate(cfg, os), hss::ConfigError);
}

TEST_CASE("witness verdicts") {
  RunConfig weak = strong_two_qubit(10.0, 1e-2);
  weak.params["lambda"] = "4";
  weak.machine = true;
  std::ostringstream os;
  CHECK(cmd_witness(weak, os) == 0);
  CHECK(os.str().find("verdict: MARKOVIAN") != std::string::npos);
  CHECK(os.str().find("n_hss=0\n") != std::string::npos);

  RunConfig strong = strong_two_qubit(15.0, 1e-3);
  strong.machine = true;
  std::ostringstream os2;
  CHECK(cmd_witness(strong, os2) == 0);
  CHECK(os2.str().find("verdict: NON-MARKOVIAN") != std::string::npos);
  const auto pos = os2.str().find("interval_0_start=");
  REQUIRE(pos != std::string::npos);
  const double start = std::stod(os2.str().substr(pos + 17));
  CHECK(start == doctest::Approx(5.128).epsilon(1e-3));
}

TEST_CASE("witness on the eternal profile is Markovian for both phases") {
  RunConfig cfg;
  cfg.model = "phase_covariant";
  cfg.params = {{"gamma1", "1"},
                {"gamma2", "1"},
                {"gamma3", "tanh_eternal:0.5"}};
  cfg.t_max = 20.0;
  cfg.dt = 1e-2;
  for (const std::string phi : {"0", "1.5707963267948966"}) {
    cfg.phi_spec = phi;
    std::ostringstream os;
    CHECK(cmd_witness(cfg, os) == 0);
    CHECK(os.str().find("verdict: MARKOVIAN") != std::string::npos);
  }
}

TEST_CASE("compare: strong coupling agrees, pauli intervals track cos t") {
  RunConfig strong = strong_two_qubit(15.0, 1e-3);
  std::ostringstream os;
  CHECK(cmd_compare(strong, os) == 0);
  CHECK(os.str().find("verdict: AGREE") != std::string::npos);

  RunConfig pauli;
  pauli.model = "pauli";
  pauli.params = {{"gamma1", "0"},
                  {"gamma2", "cosine:0:1:1"},
                  {"gamma3", "0"},
                  {"parametrization", "x_minus_half_pi"}};
  pauli.t_max = 12.0;
  pauli.dt = 1e-3;
  std::ostringstream os2;
  CHECK(cmd_compare(pauli, os2) == 0);
  const auto pos = os2.str().find("chi intervals (2):\n  [");
  REQUIRE(pos != std::string::npos);
  const double start = std::stod(os2.str().substr(pos + 22));
  CHECK(start == doctest::Approx(1.5707963).epsilon(1e-3));
}

TEST_CASE("compare: v_type fully aligned channels agree with ratio sqrt(2)/3") {
  RunConfig cfg;
  cfg.model = "v_type";
  cfg.params = {{"gamma", "1"}, {"lambda", "5e-3"}, {"theta", "1"}};
  cfg.t_max = 500.0;
  cfg.dt = 0.05;
  std::ostringstream os;
  CHECK(cmd_compare(cfg, os) == 0);
  CHECK(os.str().find("verdict: AGREE") != std::string::npos);
}

TEST_CASE("sweep: strong-coupling boundary in lambda") {
  RunConfig cfg = strong_two_qubit(15.0, 2e-3);
  cfg.sweep_param = "lambda";
  cfg.sweep_from = 0.5;
  cfg.sweep_to = 3.5;
  cfg.sweep_steps = 7;  // 0.5, 1.0, ..., 3.5
  std::ostringstream os;
  CHECK(cmd_sweep(cfg, os) == 0);
  std::istringstream lines(os.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "lambda,n_hss");
  int row = 0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    const double lambda = std::stod(line.substr(0, comma));
    const double n_hss = std::stod(line.substr(comma + 1));
    if (lambda < 2.0) {
      CHECK(n_hss > 0.0);
    } else {
      CHECK(n_hss <= 1e-12);
    }
    ++row;
  }
  CHECK(row == 7);

  cfg.sweep_param = "does_not_exist";
  CHECK_THROWS_AS(cmd_sweep(cfg, os), hss::UnknownParameter);
}

TEST_CASE("binary: exit codes and error hygiene") {
  const std::string out = "cli_test_stdout.txt";
  const std::string err = "cli_test_stderr.txt";

  // Config error: nonzero exit naming the offending key, nothing on stdout.
  int code = run_binary(
      "simulate --model two_qubit --set gamma0=1 --set lambda=1.25 "
      "--t-max -3 --dt 1e-3",
      out, err);
  CHECK(code == 2);
  CHECK(read_file(out).empty());
  CHECK(read_file(err).find("t_max") != std::string::npos);

  code = run_binary(
      "sweep --model two_qubit --set gamma0=1 --set lambda=1.25 --t-max 5 "
      "--param nope --from 0 --to 1 --steps 3",
      out, err);
  CHECK(code == 2);
  CHECK(read_file(out).empty());
  CHECK(read_file(err).find("unknown parameter") != std::string::npos);

  // Two identical runs produce byte-identical CSV.
  const std::string args =
      "simulate --model v_type --set gamma=1 --set lambda=0.05 "
      "--set theta=0.6 --t-max 2 --dt 1e-2";
  code = run_binary(args, out, err);
  CHECK(code == 0);
  const std::string first = read_file(out);
  code = run_binary(args, out, err);
  CHECK(code == 0);
  CHECK(read_file(out) == first);
  CHECK(!first.empty());

  std::remove(out.c_str());
  std::remove(err.c_str());
}

TEST_CASE("config file: flags override, params merge") {
  const std::string path = "cli_test_config.tmp";
  {
    std::ofstream f(path);
    f << "# sample config\n";
    f << "model = two_qubit\n";
    f << "gamma0 = 1\n";
    f << "lambda = 4\n";
    f << "t_max = 8\n";
    f << "dt = 1e-2\n";
  }
  RunConfig cfg;
  hss::cli::apply_config_file(cfg, path);
  CHECK(cfg.model == "two_qubit");
  CHECK(cfg.t_max == 8.0);
  CHECK(cfg.params.at("lambda") == "4");
  // A later --set wins.
  cfg.params.insert_or_assign("lambda", "1.25");
  std::ostringstream os;
  CHECK(cmd_witness(cfg, os) == 0);
  CHECK(os.str().find("NON-MARKOVIAN") != std::string::npos);
  std::remove(path.c_str());
}
