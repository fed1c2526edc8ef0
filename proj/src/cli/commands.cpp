#include "hss/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hss/cli/model_runner.hpp"
#include "hss/witness.hpp"

namespace hss::cli {

namespace {

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + cfg.out_path);
  file << text;
}

PhiSpec phi_or_default(const RunConfig& cfg, const std::string& fallback) {
  return parse_phi(cfg.phi_spec.empty() ? fallback : cfg.phi_spec);
}

double single_phi(const RunConfig& cfg, const std::string& command) {
  const PhiSpec spec = phi_or_default(cfg, "0");
  if (spec.is_grid) {
    throw ConfigError("phi must be a single value for " + command);
  }
  return spec.value;
}

std::string describe_grid(const Grid& g) {
  std::ostringstream os;
  os << "t in [0, " << format_double(g.time(g.n - 1)) << "], dt = "
     << format_double(g.dt) << " (" << g.n << " samples)";
  return os.str();
}

void append_intervals(std::ostringstream& os, const std::vector<Interval>& ivs) {
  for (const auto& iv : ivs) {
    os << "  [" << format_double(iv.t_start) << ", " << format_double(iv.t_end)
       << "]  peak " << format_double(iv.peak) << "\n";
  }
}

struct WitnessOutcome {
  double n_hss;
  double phi_star;
  std::string probe_star;  // pauli only
  Series chi;
};

WitnessOutcome run_witness(const RunConfig& cfg, const ModelRunner& runner,
                           const Grid& grid) {
  if (runner.scans_probes()) {
    // The measure scans the three optimal parametrizations.
    WitnessOutcome best{-1.0, 0.0, "", Series(grid, Eigen::ArrayXd::Zero(grid.n))};
    for (const auto& [label, phase, hss] : runner.probe_witness_set(grid)) {
      Series chi = chi_series(hss);
      const double value = positive_part_integral(chi);
      if (value > best.n_hss) {
        best = WitnessOutcome{value, phase, label, std::move(chi)};
      }
    }
    return best;
  }
  const PhiSpec spec = phi_or_default(cfg, "grid:" + std::to_string(tol::kPhiGrid));
  const auto hss_at = runner.hss_for_witness(grid);
  if (spec.is_grid) {
    const int count = runner.phi_independent() ? 1 : spec.count;
    const NHssResult res = n_hss_measure(hss_at, count);
    return {res.n_hss, res.phi_star, "", chi_series(hss_at(res.phi_star))};
  }
  Series chi = chi_series(hss_at(spec.value));
  return {positive_part_integral(chi), spec.value, "", std::move(chi)};
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  ModelRunner runner = ModelRunner::create(cfg.model, cfg.params);
  const Grid grid = make_grid(cfg);
  const double phi = single_phi(cfg, "simulate");

  const std::vector<std::string> available = runner.column_names();
  std::vector<std::string> cols = cfg.columns.empty() ? available : cfg.columns;
  for (const auto& c : cols) {
    if (std::find(available.begin(), available.end(), c) == available.end()) {
      throw ConfigError("unknown column '" + c + "' for model " + cfg.model);
    }
  }

  const SeriesBundle bundle = runner.simulate(grid, phi);
  const Series chi = chi_series(bundle.hss);
  const Series sigma = sigma_series(bundle.distance);

  std::vector<const Eigen::ArrayXd*> data;
  const Eigen::ArrayXd times = grid.times();
  for (const auto& c : cols) {
    if (c == "t") data.push_back(&times);
    else if (c == "hss") data.push_back(&bundle.hss.values);
    else if (c == "chi") data.push_back(&chi.values);
    else if (c == "trace_distance") data.push_back(&bundle.distance.values);
    else if (c == "sigma") data.push_back(&sigma.values);
    else {
      for (const auto& [name, series] : bundle.extras) {
        if (name == c) data.push_back(&series.values);
      }
    }
  }

  std::ostringstream os;
  for (size_t j = 0; j < cols.size(); ++j) {
    os << (j ? "," : "") << cols[j];
  }
  os << "\n";
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    for (size_t j = 0; j < data.size(); ++j) {
      os << (j ? "," : "") << format_double((*data[j])(i));
    }
    os << "\n";
  }
  emit(cfg, out, os.str());
  return 0;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  ModelRunner runner = ModelRunner::create(cfg.model, cfg.params);
  const Grid grid = make_grid(cfg);
  const WitnessOutcome res = run_witness(cfg, runner, grid);
  const std::vector<Interval> intervals = detect_intervals(res.chi, cfg.tol);
  const bool non_markovian = !intervals.empty();

  std::ostringstream os;
  os << "model: " << cfg.model << "\n";
  os << "grid: " << describe_grid(grid) << "\n";
  if (!res.probe_star.empty()) {
    os << "parametrization_star: " << res.probe_star << "\n";
  }
  os << "phi_star: " << format_double(res.phi_star) << "\n";
  os << "n_hss: " << format_double(res.n_hss) << "\n";
  os << "non-Markovian intervals (chi > " << format_double(cfg.tol)
     << "): " << intervals.size() << "\n";
  append_intervals(os, intervals);
  os << "verdict: " << (non_markovian ? "NON-MARKOVIAN" : "MARKOVIAN") << "\n";
  if (cfg.machine) {
    os << "---\n";
    os << "verdict=" << (non_markovian ? "NON-MARKOVIAN" : "MARKOVIAN") << "\n";
    os << "n_hss=" << format_double(res.n_hss) << "\n";
    os << "phi_star=" << format_double(res.phi_star) << "\n";
    if (!res.probe_star.empty()) {
      os << "parametrization_star=" << res.probe_star << "\n";
    }
    os << "intervals=" << intervals.size() << "\n";
    for (size_t k = 0; k < intervals.size(); ++k) {
      os << "interval_" << k << "_start=" << format_double(intervals[k].t_start)
         << "\n";
      os << "interval_" << k << "_end=" << format_double(intervals[k].t_end)
         << "\n";
      os << "interval_" << k << "_peak=" << format_double(intervals[k].peak)
         << "\n";
    }
  }
  emit(cfg, out, os.str());
  return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  ModelRunner runner = ModelRunner::create(cfg.model, cfg.params);
  const Grid grid = make_grid(cfg);
  const double phi = single_phi(cfg, "compare");
  const SeriesBundle bundle = runner.simulate(grid, phi);
  const double n_hss = positive_part_integral(chi_series(bundle.hss));
  const WitnessReport report =
      build_witness_report(bundle.hss, bundle.distance, cfg.tol, n_hss, phi);

  std::ostringstream os;
  os << "model: " << cfg.model << "\n";
  os << "grid: " << describe_grid(grid) << "\n";
  os << "phi: " << format_double(phi) << "\n";
  os << "tol: " << format_double(cfg.tol) << "\n";
  os << "samples_compared: " << report.agreement.samples_compared << "\n";
  os << "sign_matches: " << report.agreement.sign_matches << "\n";
  os << "excluded_below_tol: " << report.agreement.excluded_below_tol << "\n";
  os << "agreement: " << format_double(100.0 * report.agreement.fraction())
     << "%\n";
  os << "chi intervals (" << report.nm_intervals_chi.size() << "):\n";
  append_intervals(os, report.nm_intervals_chi);
  os << "sigma intervals (" << report.nm_intervals_sigma.size() << "):\n";
  append_intervals(os, report.nm_intervals_sigma);
  os << "verdict: " << (report.agreement.perfect() ? "AGREE" : "DISAGREE")
     << "\n";
  if (cfg.machine) {
    os << "---\n";
    os << "agreement_fraction=" << format_double(report.agreement.fraction())
       << "\n";
    os << "samples_compared=" << report.agreement.samples_compared << "\n";
    os << "sign_matches=" << report.agreement.sign_matches << "\n";
    os << "excluded_below_tol=" << report.agreement.excluded_below_tol << "\n";
    os << "n_hss=" << format_double(n_hss) << "\n";
  }
  emit(cfg, out, os.str());
  return report.agreement.perfect() ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  ModelRunner runner = ModelRunner::create(cfg.model, cfg.params);
  const Grid grid = make_grid(cfg);
  if (cfg.sweep_param.empty()) throw ConfigError("sweep requires --param");
  if (cfg.sweep_steps < 1) throw ConfigError("sweep steps must be >= 1");
  if (!std::isfinite(cfg.sweep_from) || !std::isfinite(cfg.sweep_to)) {
    throw ConfigError("sweep range must be finite");
  }

  std::ostringstream os;
  os << cfg.sweep_param << ",n_hss\n";
  for (int k = 0; k < cfg.sweep_steps; ++k) {
    const double value =
        cfg.sweep_steps == 1
            ? cfg.sweep_from
            : cfg.sweep_from + (cfg.sweep_to - cfg.sweep_from) * k /
                                   (cfg.sweep_steps - 1);
    const ModelRunner swept = runner.with_value(cfg.sweep_param, value);
    const WitnessOutcome res = run_witness(cfg, swept, grid);
    os << format_double(value) << "," << format_double(res.n_hss) << "\n";
  }
  emit(cfg, out, os.str());
  return 0;
}

}  // namespace hss::cli
