#include "hss/cli/model_runner.hpp"

#include <algorithm>

namespace hss::cli {

namespace {

using models::LambdaDynamics;
using models::LambdaParams;
using models::PauliParams;
using models::PauliProbe;
using models::PhaseCovariantParams;
using models::TwoQubitParams;
using models::VTypeParams;

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"phase_covariant", {"gamma1", "gamma2", "gamma3", "omega"}},
      {"pauli", {"gamma1", "gamma2", "gamma3", "parametrization"}},
      {"two_qubit", {"gamma0", "lambda"}},
      {"v_type", {"gamma", "lambda", "theta"}},
      {"lambda_type",
       {"gamma0", "lambda", "omega_cav", "delta1", "delta2", "trunc_k"}},
  };
  return keys;
}

const std::string& require(const std::map<std::string, std::string>& params,
                           const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw ConfigError("missing required parameter: " + key);
  }
  return it->second;
}

double require_number(const std::map<std::string, std::string>& params,
                      const std::string& key) {
  return parse_number(require(params, key), key);
}

double optional_number(const std::map<std::string, std::string>& params,
                       const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : parse_number(it->second, key);
}

Eigen::ArrayXd sample_profile(const RateProfile& p, const Grid& grid) {
  Eigen::ArrayXd out(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) out(i) = p(grid.time(i));
  return out;
}

}  // namespace

PauliProbe parse_pauli_probe(const std::string& text) {
  if (text == "x_plus_0") return PauliProbe::XPlus0;
  if (text == "x_plus_half_pi") return PauliProbe::XPlusHalfPi;
  if (text == "x_minus_half_pi") return PauliProbe::XMinusHalfPi;
  throw ConfigError(
      "invalid parametrization '" + text +
      "' (expected x_plus_0, x_plus_half_pi or x_minus_half_pi)");
}

std::string pauli_probe_name(PauliProbe probe) {
  switch (probe) {
    case PauliProbe::XPlus0: return "x_plus_0";
    case PauliProbe::XPlusHalfPi: return "x_plus_half_pi";
    case PauliProbe::XMinusHalfPi: return "x_minus_half_pi";
  }
  return "?";
}

double pauli_probe_phase(PauliProbe probe) {
  constexpr double kHalfPi = 1.57079632679489661923;
  return probe == PauliProbe::XPlus0 ? 0.0 : kHalfPi;
}

const std::vector<std::string>& ModelRunner::known_models() {
  static const std::vector<std::string> names = {
      "phase_covariant", "pauli", "two_qubit", "v_type", "lambda_type"};
  return names;
}

ModelRunner ModelRunner::create(
    const std::string& model, const std::map<std::string, std::string>& params) {
  const auto& models_list = known_models();
  if (std::find(models_list.begin(), models_list.end(), model) ==
      models_list.end()) {
    throw ConfigError("unknown model: '" + model +
                      "' (expected phase_covariant, pauli, two_qubit, v_type "
                      "or lambda_type)");
  }
  const auto& keys = allowed_keys().at(model);
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw UnknownParameter(key);
    }
  }
  return ModelRunner(model, params);
}

ModelRunner::ModelRunner(std::string model,
                         std::map<std::string, std::string> raw)
    : model_(std::move(model)),
      raw_(std::move(raw)),
      params_(TwoQubitParams{1.0, 1.0}) {
  if (model_ == "phase_covariant") {
    params_ = PhaseCovariantParams{
        parse_profile(require(raw_, "gamma1"), "gamma1"),
        parse_profile(require(raw_, "gamma2"), "gamma2"),
        parse_profile(require(raw_, "gamma3"), "gamma3"),
        raw_.count("omega") ? parse_profile(raw_.at("omega"), "omega")
                            : RateProfile::constant(0.0)};
  } else if (model_ == "pauli") {
    params_ = PauliParams{parse_profile(require(raw_, "gamma1"), "gamma1"),
                          parse_profile(require(raw_, "gamma2"), "gamma2"),
                          parse_profile(require(raw_, "gamma3"), "gamma3")};
    if (raw_.count("parametrization")) {
      probe_ = parse_pauli_probe(raw_.at("parametrization"));
    }
  } else if (model_ == "two_qubit") {
    const TwoQubitParams p{require_number(raw_, "gamma0"),
                           require_number(raw_, "lambda")};
    if (!(p.gamma0 > 0.0)) throw ConfigError("gamma0 must be > 0");
    if (!(p.lambda > 0.0)) throw ConfigError("lambda must be > 0");
    params_ = p;
  } else if (model_ == "v_type") {
    try {
      params_ = VTypeParams(require_number(raw_, "gamma"),
                            require_number(raw_, "lambda"),
                            require_number(raw_, "theta"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else {
    const LambdaParams p{require_number(raw_, "gamma0"),
                         require_number(raw_, "lambda"),
                         require_number(raw_, "omega_cav"),
                         require_number(raw_, "delta1"),
                         require_number(raw_, "delta2"),
                         optional_number(raw_, "trunc_k", 50.0)};
    if (!(p.gamma0 > 0.0) || !(p.lambda > 0.0) || !(p.omega_cav > 0.0)) {
      throw ConfigError("gamma0, lambda and omega_cav must be > 0");
    }
    if (!(p.trunc_k > 0.0)) throw ConfigError("trunc_k must be > 0");
    params_ = p;
  }
}

bool ModelRunner::phi_independent() const {
  return model_ == "two_qubit" || model_ == "v_type" || model_ == "lambda_type";
}

std::vector<std::string> ModelRunner::column_names() const {
  std::vector<std::string> cols = {"t", "hss", "chi", "trace_distance", "sigma"};
  if (model_ == "two_qubit") {
    cols.push_back("P");
  } else if (model_ == "v_type") {
    cols.push_back("abs_g_plus");
    cols.push_back("abs_g_minus");
  } else {
    cols.push_back("gamma1");
    cols.push_back("gamma2");
  }
  return cols;
}

SeriesBundle ModelRunner::simulate(const Grid& grid, double phi) const {
  if (const auto* p = std::get_if<PhaseCovariantParams>(&params_)) {
    const auto tables = models::phase_covariant_tables(*p, grid);
    return SeriesBundle{
        models::phase_covariant_hss_series(tables, phi),
        models::phase_covariant_distance_series(tables, phi),
        {{"gamma1", Series(grid, sample_profile(p->gamma1, grid))},
         {"gamma2", Series(grid, sample_profile(p->gamma2, grid))}}};
  }
  if (const auto* p = std::get_if<PauliParams>(&params_)) {
    const auto tables = models::pauli_tables(*p, grid);
    return SeriesBundle{
        models::pauli_hss_series(tables, probe_),
        models::pauli_distance_series(tables, probe_),
        {{"gamma1", Series(grid, sample_profile(p->gamma1, grid))},
         {"gamma2", Series(grid, sample_profile(p->gamma2, grid))}}};
  }
  if (const auto* p = std::get_if<TwoQubitParams>(&params_)) {
    return SeriesBundle{models::two_qubit_hss_series(*p, grid),
                        models::two_qubit_distance_series(*p, grid),
                        {{"P", models::two_qubit_P_series(*p, grid)}}};
  }
  if (const auto* p = std::get_if<VTypeParams>(&params_)) {
    return SeriesBundle{
        models::vtype_hss_series(*p, grid),
        models::vtype_distance_series(*p, grid),
        {{"abs_g_plus", models::vtype_abs_g_series(*p, grid, true)},
         {"abs_g_minus", models::vtype_abs_g_series(*p, grid, false)}}};
  }
  const auto& p = std::get<LambdaParams>(params_);
  const LambdaDynamics dyn = LambdaDynamics::from_params(p, grid);
  return SeriesBundle{models::lambda_hss_series(dyn),
                      models::lambda_distance_series(dyn),
                      {{"gamma1", dyn.gamma1()}, {"gamma2", dyn.gamma2()}}};
}

std::function<Series(double)> ModelRunner::hss_for_witness(
    const Grid& grid) const {
  if (const auto* p = std::get_if<PhaseCovariantParams>(&params_)) {
    auto tables = std::make_shared<models::PhaseCovariantTables>(
        models::phase_covariant_tables(*p, grid));
    return [tables](double phi) {
      return models::phase_covariant_hss_series(*tables, phi);
    };
  }
  if (const auto* p = std::get_if<PauliParams>(&params_)) {
    auto tables =
        std::make_shared<models::PauliTables>(models::pauli_tables(*p, grid));
    const PauliProbe probe = probe_;
    return [tables, probe](double) {
      return models::pauli_hss_series(*tables, probe);
    };
  }
  if (const auto* p = std::get_if<TwoQubitParams>(&params_)) {
    auto series =
        std::make_shared<Series>(models::two_qubit_hss_series(*p, grid));
    return [series](double) { return *series; };
  }
  if (const auto* p = std::get_if<VTypeParams>(&params_)) {
    auto series = std::make_shared<Series>(models::vtype_hss_series(*p, grid));
    return [series](double) { return *series; };
  }
  const auto& p = std::get<LambdaParams>(params_);
  auto series = std::make_shared<Series>(
      models::lambda_hss_series(LambdaDynamics::from_params(p, grid)));
  return [series](double) { return *series; };
}

std::vector<std::tuple<std::string, double, Series>>
ModelRunner::probe_witness_set(const Grid& grid) const {
  const auto* p = std::get_if<PauliParams>(&params_);
  if (p == nullptr) {
    throw Error("probe_witness_set: only defined for the pauli model");
  }
  const auto tables = models::pauli_tables(*p, grid);
  std::vector<std::tuple<std::string, double, Series>> out;
  for (PauliProbe probe : models::kPauliProbes) {
    out.emplace_back(pauli_probe_name(probe), pauli_probe_phase(probe),
                     models::pauli_hss_series(tables, probe));
  }
  return out;
}

ModelRunner ModelRunner::with_value(const std::string& key, double value) const {
  const auto& keys = allowed_keys().at(model_);
  if (std::find(keys.begin(), keys.end(), key) == keys.end() ||
      key == "parametrization") {
    throw UnknownParameter(key);
  }
  auto raw = raw_;
  raw[key] = format_double(value);
  return ModelRunner(model_, std::move(raw));
}

}  // namespace hss::cli
