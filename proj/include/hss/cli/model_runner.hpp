#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "hss/cli/run_config.hpp"
#include "hss/models/lambda_type.hpp"
#include "hss/models/pauli.hpp"
#include "hss/models/phase_covariant.hpp"
#include "hss/models/two_qubit.hpp"
#include "hss/models/v_type.hpp"

namespace hss::cli {

struct SeriesBundle {
  Series hss;
  Series distance;
  std::vector<std::pair<std::string, Series>> extras;
};

/// Validated model parameters plus the sampling logic behind every CLI
/// command. Rejects unknown keys, reports missing ones.
class ModelRunner {
 public:
  static ModelRunner create(const std::string& model,
                            const std::map<std::string, std::string>& params);

  static const std::vector<std::string>& known_models();

  const std::string& model() const { return model_; }
  /// True when the evolved HSS does not depend on the probe phase; the
  /// witness then evaluates a single phase.
  bool phi_independent() const;
  /// True for the Pauli model, whose measure scans the three optimal probe
  /// parametrizations instead of a phase grid.
  bool scans_probes() const { return model_ == "pauli"; }

  /// Column names in output order (starting with "t").
  std::vector<std::string> column_names() const;

  /// hss / trace-distance / extra columns on the grid at probe phase phi.
  SeriesBundle simulate(const Grid& grid, double phi) const;

  /// Phase -> hss series with per-grid tables built once and shared across
  /// calls.
  std::function<Series(double)> hss_for_witness(const Grid& grid) const;

  /// Pauli only: (label, canonical phase, hss series) per parametrization.
  std::vector<std::tuple<std::string, double, Series>> probe_witness_set(
      const Grid& grid) const;

  /// Copy with one parameter overridden by a plain number (sweep support).
  /// Throws UnknownParameter if the model has no such key.
  ModelRunner with_value(const std::string& key, double value) const;

 private:
  ModelRunner(std::string model, std::map<std::string, std::string> raw);

  using Params =
      std::variant<models::PhaseCovariantParams, models::PauliParams,
                   models::TwoQubitParams, models::VTypeParams,
                   models::LambdaParams>;

  std::string model_;
  std::map<std::string, std::string> raw_;
  Params params_;
  models::PauliProbe probe_ = models::PauliProbe::XPlus0;
};

models::PauliProbe parse_pauli_probe(const std::string& text);
std::string pauli_probe_name(models::PauliProbe probe);
double pauli_probe_phase(models::PauliProbe probe);

}  // namespace hss::cli
