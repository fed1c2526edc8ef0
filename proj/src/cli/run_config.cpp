#include "hss/cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hss::cli {

double parse_number(const std::string& text, const std::string& key) {
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing chars");
    if (!std::isfinite(v)) throw std::invalid_argument("not finite");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for " + key + ": '" + text + "'");
  }
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

RateProfile parse_profile(const std::string& text, const std::string& key) {
  const auto parts = split(text, ':');
  const std::string& head = parts[0];
  auto num = [&](size_t i) { return parse_number(parts[i], key); };
  try {
    if (parts.size() == 1) return RateProfile::constant(num(0));
    if (head == "constant" && parts.size() == 2) {
      return RateProfile::constant(num(1));
    }
    if (head == "cosine" && parts.size() == 4) {
      return RateProfile::cosine_modulated(num(1), num(2), num(3));
    }
    if (head == "tanh_eternal" && parts.size() == 2) {
      return RateProfile::tanh_eternal(num(1));
    }
    if (head == "piecewise" && parts.size() >= 5 && parts.size() % 2 == 1) {
      std::vector<std::pair<double, double>> knots;
      for (size_t i = 1; i + 1 < parts.size(); i += 2) {
        knots.emplace_back(num(i), num(i + 1));
      }
      return RateProfile::piecewise_linear(std::move(knots));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("invalid rate profile for " + key + ": " + e.what());
  }
  throw ConfigError("invalid rate profile for " + key + ": '" + text + "'");
}

PhiSpec parse_phi(const std::string& text) {
  if (text.rfind("grid:", 0) == 0) {
    const double raw = parse_number(text.substr(5), "phi");
    const int count = static_cast<int>(raw);
    if (count < 1 || raw != count) {
      throw ConfigError("phi grid count must be a positive integer: '" + text +
                        "'");
    }
    return {true, 0.0, count};
  }
  return {false, parse_number(text, "phi"), 0};
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config file line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config file line " + std::to_string(lineno) +
                        ": empty key or value");
    }
    if (key == "model") {
      cfg.model = value;
    } else if (key == "t_max") {
      cfg.t_max = parse_number(value, key);
    } else if (key == "dt") {
      cfg.dt = parse_number(value, key);
    } else if (key == "phi") {
      cfg.phi_spec = value;
    } else if (key == "tol") {
      cfg.tol = parse_number(value, key);
    } else if (key == "out") {
      cfg.out_path = value;
    } else if (key == "columns") {
      cfg.columns.clear();
      for (auto& c : split(value, ',')) cfg.columns.push_back(trim(c));
    } else if (key == "machine") {
      cfg.machine = value == "true" || value == "1";
    } else {
      cfg.params.insert_or_assign(key, value);
    }
  }
}

void validate_grid_fields(const RunConfig& cfg) {
  if (!(cfg.dt > 0.0)) {
    throw ConfigError("dt must be > 0 (got " + format_double(cfg.dt) + ")");
  }
  if (!(cfg.t_max > cfg.dt)) {
    throw ConfigError("t_max must be > dt (got t_max = " +
                      format_double(cfg.t_max) + ", dt = " +
                      format_double(cfg.dt) + ")");
  }
  if (!(cfg.tol >= 0.0)) {
    throw ConfigError("tol must be >= 0");
  }
}

Grid make_grid(const RunConfig& cfg) {
  validate_grid_fields(cfg);
  const auto n =
      static_cast<Eigen::Index>(std::floor(cfg.t_max / cfg.dt + 1e-9)) + 1;
  return Grid(0.0, cfg.dt, std::max<Eigen::Index>(3, n));
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace hss::cli
