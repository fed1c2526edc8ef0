#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hss/errors.hpp"

namespace hss {

/// Named, parameterized time-dependent decay rate gamma(t). Rates are in the
/// model's base-rate unit, frequencies in its inverse time unit.
class RateProfile {
 public:
  enum class Kind { Constant, CosineModulated, TanhEternal, PiecewiseLinear };

  /// gamma(t) = c
  static RateProfile constant(double c);
  /// gamma(t) = a + b*cos(omega*t)
  static RateProfile cosine_modulated(double a, double b, double omega);
  /// gamma(t) = -scale*tanh(t); the always-negative dephasing rate used by
  /// the eternal-non-Markovianity scenario.
  static RateProfile tanh_eternal(double scale);
  /// Continuous piecewise-linear interpolation through (t, value) knots,
  /// clamped outside the knot range. Knot times must be strictly increasing.
  static RateProfile piecewise_linear(std::vector<std::pair<double, double>> knots);

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  std::string describe() const;

 private:
  RateProfile(Kind k, std::vector<double> params,
              std::vector<std::pair<double, double>> knots)
      : kind_(k), params_(std::move(params)), knots_(std::move(knots)) {}
  Kind kind_;
  std::vector<double> params_;
  std::vector<std::pair<double, double>> knots_;
};

}  // namespace hss
