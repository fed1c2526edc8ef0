#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hss/errors.hpp"
#include "hss/numerics.hpp"
#include "hss/rate_profile.hpp"
#include "hss/tolerances.hpp"

namespace hss::cli {

/// One CLI run: model, its key=value parameters, the time grid, the phase
/// specification (a number or "grid:<count>") and output options.
struct RunConfig {
  std::string model;
  std::map<std::string, std::string> params;
  double t_max = 0.0;
  double dt = tol::kDefaultDt;
  std::string phi_spec;  // empty: command default
  double tol = tol::kWitness;
  std::vector<std::string> columns;  // empty: all available
  std::string out_path;              // empty: stdout
  bool machine = false;

  std::string sweep_param;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_steps = 0;
};

struct PhiSpec {
  bool is_grid;
  double value;  // when !is_grid
  int count;     // when is_grid
};

double parse_number(const std::string& text, const std::string& key);

/// Accepts a bare number (constant rate) or one of
/// constant:<c> | cosine:<a>:<b>:<omega> | tanh_eternal:<scale> |
/// piecewise:<t0>:<v0>:<t1>:<v1>:...
RateProfile parse_profile(const std::string& text, const std::string& key);

PhiSpec parse_phi(const std::string& text);

/// Reads `key = value` lines ('#' starts a comment). Reserved keys (model,
/// t_max, dt, phi, tol, out, columns, machine) set config fields; anything
/// else is a model parameter. Assignments are unconditional: apply the file
/// first, then command-line flags on top (flags override the file).
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Validates grid fields; throws ConfigError naming the offending key.
void validate_grid_fields(const RunConfig& cfg);

Grid make_grid(const RunConfig& cfg);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

}  // namespace hss::cli
