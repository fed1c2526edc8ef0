#include "hss/witness.hpp"

#include <cmath>

namespace hss {

Series chi_series(const Series& hss) { return central_diff(hss); }

Series sigma_series(const Series& trace_distance) {
  return central_diff(trace_distance);
}

std::vector<Interval> detect_intervals(const Series& w, double tol) {
  if (tol < 0.0) throw std::invalid_argument("detect_intervals: tol must be >= 0");
  const auto& v = w.values;
  const Grid& g = w.grid;
  std::vector<Interval> out;
  Eigen::Index i = 0;
  while (i < g.n) {
    if (!(v(i) > tol)) {
      ++i;
      continue;
    }
    const Eigen::Index first = i;
    double peak = v(i);
    while (i + 1 < g.n && v(i + 1) > tol) {
      ++i;
      peak = std::max(peak, v(i));
    }
    const Eigen::Index last = i;
    double t_start = g.time(first);
    if (first > 0) {
      // Interpolate the upward tol crossing on [first-1, first].
      t_start = g.time(first - 1) +
                g.dt * (tol - v(first - 1)) / (v(first) - v(first - 1));
    }
    double t_end = g.time(last);
    if (last + 1 < g.n) {
      t_end = g.time(last) + g.dt * (v(last) - tol) / (v(last) - v(last + 1));
    }
    out.push_back(Interval{t_start, t_end, peak});
    ++i;
  }
  return out;
}

NHssResult n_hss_measure(const std::function<Series(double)>& model_eval,
                         int phi_grid_size) {
  if (phi_grid_size < 1) {
    throw std::invalid_argument("n_hss_measure: phi_grid_size must be >= 1");
  }
  constexpr double kTwoPi = 6.28318530717958647692;
  NHssResult best{-1.0, 0.0};
  for (int k = 0; k < phi_grid_size; ++k) {
    const double phi = kTwoPi * k / phi_grid_size;
    const double value = positive_part_integral(chi_series(model_eval(phi)));
    if (value > best.n_hss) best = {value, phi};
  }
  return best;
}

AgreementRecord sign_agreement(const Series& chi, const Series& sigma,
                               double tol) {
  if (!same_grid(chi.grid, sigma.grid)) {
    throw GridMismatch("sign_agreement: series on different grids");
  }
  AgreementRecord rec;
  for (Eigen::Index i = 0; i < chi.grid.n; ++i) {
    const double a = chi.values(i), b = sigma.values(i);
    if (std::abs(a) > tol && std::abs(b) > tol) {
      ++rec.samples_compared;
      if ((a > 0.0) == (b > 0.0)) ++rec.sign_matches;
    } else {
      ++rec.excluded_below_tol;
    }
  }
  return rec;
}

WitnessReport build_witness_report(const Series& hss, const Series& distance,
                                   double tol, double n_hss, double phi_star) {
  Series chi = chi_series(hss);
  Series sigma = sigma_series(distance);
  WitnessReport rep{chi,
                    sigma,
                    detect_intervals(chi, tol),
                    detect_intervals(sigma, tol),
                    n_hss,
                    phi_star,
                    sign_agreement(chi, sigma, tol)};
  return rep;
}

}  // namespace hss
