#pragma once

#include <functional>
#include <vector>

#include "hss/numerics.hpp"

namespace hss {

/// A maximal run of witness samples above tolerance, with interpolated
/// boundaries and the peak value inside.
struct Interval {
  double t_start;
  double t_end;
  double peak;
};

struct AgreementRecord {
  Eigen::Index samples_compared = 0;
  Eigen::Index sign_matches = 0;
  Eigen::Index excluded_below_tol = 0;
  /// Fraction of compared samples with matching signs; 1 when nothing was
  /// comparable.
  double fraction() const {
    return samples_compared == 0
               ? 1.0
               : static_cast<double>(sign_matches) /
                     static_cast<double>(samples_compared);
  }
  bool perfect() const { return sign_matches == samples_compared; }
};

/// chi(t) = d/dt HSS, realized by central differences on the sample grid.
Series chi_series(const Series& hss);

/// sigma(t) = d/dt D(rho1(t), rho2(t)), same differentiation.
Series sigma_series(const Series& trace_distance);

/// Maximal runs where values exceed tol. Boundaries are linearly
/// interpolated between the bracketing samples (grid edges when a run
/// touches them); peak is the largest sample in the run.
std::vector<Interval> detect_intervals(const Series& w, double tol);

struct NHssResult {
  double n_hss;
  double phi_star;
};

/// Degree-of-non-Markovianity measure: evaluates
/// positive_part_integral(chi_series(hss(phi))) on a uniform phase grid
/// over [0, 2pi) and returns the maximum with its phase. The probe basis is
/// fixed per model; only the phase is scanned.
NHssResult n_hss_measure(const std::function<Series(double)>& model_eval,
                         int phi_grid_size);

/// Per-sample sign comparison of the two witnesses wherever both exceed tol
/// in magnitude.
AgreementRecord sign_agreement(const Series& chi, const Series& sigma,
                               double tol);

/// Everything the CLI reports for one run.
struct WitnessReport {
  Series chi;
  Series sigma;
  std::vector<Interval> nm_intervals_chi;
  std::vector<Interval> nm_intervals_sigma;
  double n_hss = 0.0;
  double phi_star = 0.0;
  AgreementRecord agreement;
};

WitnessReport build_witness_report(const Series& hss, const Series& distance,
                                   double tol, double n_hss, double phi_star);

}  // namespace hss
