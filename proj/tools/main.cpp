// Command-line front end: simulate the built-in open-system models, emit
// CSV time series, report non-Markovianity witnesses and measures, and
// sweep parameters.

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "hss/cli/commands.hpp"

namespace {

struct Flags {
  std::optional<std::string> model;
  std::vector<std::string> sets;
  std::string config_path;
  std::optional<double> t_max;
  std::optional<double> dt;
  std::optional<std::string> phi;
  std::optional<double> tol;
  std::optional<std::string> out;
  std::optional<std::string> columns;
  bool machine = false;

  std::optional<std::string> sweep_param;
  std::optional<double> sweep_from;
  std::optional<double> sweep_to;
  std::optional<int> sweep_steps;
};

void add_common_options(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--model", flags.model,
                  "Model: phase_covariant, pauli, two_qubit, v_type, "
                  "lambda_type");
  cmd->add_option("--set", flags.sets,
                  "Model parameter as key=value; repeatable. Rates accept a "
                  "number or constant:<c>, cosine:<a>:<b>:<omega>, "
                  "tanh_eternal:<s>, piecewise:<t>:<v>:...");
  cmd->add_option("--config", flags.config_path,
                  "Config file of `key = value` lines (# comments); flags "
                  "override it");
  cmd->add_option("--t-max", flags.t_max, "End of the time grid");
  cmd->add_option("--dt", flags.dt, "Grid spacing (default 1e-3)");
  cmd->add_option("--phi", flags.phi,
                  "Probe phase: a number, or grid:<count> to maximize "
                  "(witness/sweep)");
  cmd->add_option("--tol", flags.tol,
                  "Witness sign/interval tolerance (default 1e-8)");
  cmd->add_option("--out", flags.out, "Write output to this file");
  cmd->add_option("--columns", flags.columns,
                  "Comma-separated CSV column selection");
  cmd->add_flag("--machine", flags.machine,
                "Append a machine-readable key=value block");
}

hss::cli::RunConfig build_config(const Flags& flags) {
  hss::cli::RunConfig cfg;
  if (!flags.config_path.empty()) {
    hss::cli::apply_config_file(cfg, flags.config_path);
  }
  if (flags.model) cfg.model = *flags.model;
  if (flags.t_max) cfg.t_max = *flags.t_max;
  if (flags.dt) cfg.dt = *flags.dt;
  if (flags.phi) cfg.phi_spec = *flags.phi;
  if (flags.tol) cfg.tol = *flags.tol;
  if (flags.out) cfg.out_path = *flags.out;
  if (flags.machine) cfg.machine = true;
  if (flags.columns) {
    cfg.columns.clear();
    std::string cur;
    for (char c : *flags.columns + ",") {
      if (c == ',') {
        if (!cur.empty()) cfg.columns.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
  }
  for (const auto& kv : flags.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size()) {
      throw hss::ConfigError("--set expects key=value, got '" + kv + "'");
    }
    cfg.params.insert_or_assign(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (cfg.model.empty()) throw hss::ConfigError("--model is required");
  if (flags.sweep_param) cfg.sweep_param = *flags.sweep_param;
  if (flags.sweep_from) cfg.sweep_from = *flags.sweep_from;
  if (flags.sweep_to) cfg.sweep_to = *flags.sweep_to;
  if (flags.sweep_steps) cfg.sweep_steps = *flags.sweep_steps;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hss: non-Markovianity witnesses from the Hilbert-Schmidt speed for "
      "exactly solvable open quantum systems"};
  app.require_subcommand(1);
  app.footer(
      "Time is dimensionless per model: 1/gamma0 for two_qubit and "
      "lambda_type, 1/gamma for v_type, the base rate unit for "
      "phase_covariant and pauli.");

  Flags flags;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Emit CSV series (t, hss, chi, trace_distance, sigma, ...)");
  CLI::App* witness = app.add_subcommand(
      "witness", "Report non-Markovian intervals, n_hss and a verdict");
  CLI::App* compare = app.add_subcommand(
      "compare", "Compare hss and trace-distance witness signs; exit 0 iff "
                 "they fully agree");
  CLI::App* sweep = app.add_subcommand(
      "sweep", "CSV of n_hss over a linear parameter range");
  for (CLI::App* cmd : {simulate, witness, compare, sweep}) {
    add_common_options(cmd, flags);
  }
  sweep->add_option("--param", flags.sweep_param, "Parameter to sweep")
      ->required();
  sweep->add_option("--from", flags.sweep_from, "First value")->required();
  sweep->add_option("--to", flags.sweep_to, "Last value")->required();
  sweep->add_option("--steps", flags.sweep_steps, "Number of values")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const hss::cli::RunConfig cfg = build_config(flags);
    if (simulate->parsed()) return hss::cli::cmd_simulate(cfg, std::cout);
    if (witness->parsed()) return hss::cli::cmd_witness(cfg, std::cout);
    if (compare->parsed()) return hss::cli::cmd_compare(cfg, std::cout);
    return hss::cli::cmd_sweep(cfg, std::cout);
  } catch (const hss::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hss::UnknownParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime failure: " << e.what() << "\n";
    return 1;
  }
}
