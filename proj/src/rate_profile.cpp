#include "hss/rate_profile.hpp"

#include <cmath>
#include <sstream>

namespace hss {

RateProfile RateProfile::constant(double c) {
  return RateProfile(Kind::Constant, {c}, {});
}

RateProfile RateProfile::cosine_modulated(double a, double b, double omega) {
  return RateProfile(Kind::CosineModulated, {a, b, omega}, {});
}

RateProfile RateProfile::tanh_eternal(double scale) {
  return RateProfile(Kind::TanhEternal, {scale}, {});
}

RateProfile RateProfile::piecewise_linear(
    std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) {
    throw std::invalid_argument("piecewise_linear: need at least 2 knots");
  }
  for (size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first)) {
      throw std::invalid_argument("piecewise_linear: knot times must increase");
    }
  }
  return RateProfile(Kind::PiecewiseLinear, {}, std::move(knots));
}

double RateProfile::operator()(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return params_[0];
    case Kind::CosineModulated:
      return params_[0] + params_[1] * std::cos(params_[2] * t);
    case Kind::TanhEternal:
      return -params_[0] * std::tanh(t);
    case Kind::PiecewiseLinear: {
      if (t <= knots_.front().first) return knots_.front().second;
      if (t >= knots_.back().first) return knots_.back().second;
      size_t hi = 1;
      while (knots_[hi].first < t) ++hi;
      const auto& [t0, v0] = knots_[hi - 1];
      const auto& [t1, v1] = knots_[hi];
      return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    }
  }
  return 0.0;
}

std::string RateProfile::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Constant:
      os << "constant:" << params_[0];
      break;
    case Kind::CosineModulated:
      os << "cosine:" << params_[0] << ":" << params_[1] << ":" << params_[2];
      break;
    case Kind::TanhEternal:
      os << "tanh_eternal:" << params_[0];
      break;
    case Kind::PiecewiseLinear:
      os << "piecewise";
      for (const auto& [t, v] : knots_) os << ":" << t << ":" << v;
      break;
  }
  return os.str();
}

}  // namespace hss
