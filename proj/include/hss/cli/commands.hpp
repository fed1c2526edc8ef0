#pragma once

#include <ostream>

#include "hss/cli/run_config.hpp"

namespace hss::cli {

// Each command validates its configuration, computes everything, then
// writes the complete output in one piece (to cfg.out_path when set,
// otherwise to `out`). Errors are thrown: ConfigError / UnknownParameter
// map to exit status 2, anything else to 1; nothing is written on error.

/// CSV stream: header plus one row per grid point.
int cmd_simulate(const RunConfig& cfg, std::ostream& out);

/// Non-Markovian intervals, the measure and its maximizing phase, and a
/// MARKOVIAN / NON-MARKOVIAN verdict.
int cmd_witness(const RunConfig& cfg, std::ostream& out);

/// Runs the hss- and trace-distance witnesses on one grid and compares
/// signs; exit status 0 only on a perfect match above tolerance.
int cmd_compare(const RunConfig& cfg, std::ostream& out);

/// CSV of (parameter value, n_hss) over a linear parameter range.
int cmd_sweep(const RunConfig& cfg, std::ostream& out);

}  // namespace hss::cli
