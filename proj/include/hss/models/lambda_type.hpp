#pragma once

#include "hss/linalg.hpp"
#include "hss/numerics.hpp"
#include "hss/rate_profile.hpp"

namespace hss::models {

// Lambda-type three-level atom coupled off-resonantly to a lossy cavity
// with a Lorentzian mode density of width lambda centered at omega_cav;
// gamma0 sets the coupling strength and delta_i = omega_i - omega_cav are
// the two transition detunings. Large detunings drive the decay rates
// temporarily negative.
//
// Basis convention: {|a>, |b>, |c>} with |a> the excited level and |b>, |c>
// the two ground levels fed by channels 1 and 2.
struct LambdaParams {
  double gamma0;
  double lambda;
  double omega_cav;
  double delta1;
  double delta2;
  // Frequency-integral truncation half-width in units of lambda; the window
  // is [max(0, omega_cav - k*lambda), omega_cav + k*lambda].
  double trunc_k = 50.0;
};

struct LambdaRates {
  double gamma1;
  double gamma2;
  double lambda1;
  double lambda2;
};

/// Time-dependent rate tables for the Lambda model on a uniform grid.
/// The decay rate of channel i is the running time integral of the memory
/// kernel k_i(s) = int J(w) cos((w - w_i) s) dw over the truncated window;
/// the sine kernel gives the Lamb-shift rate the same way. On top of those
/// sit their own running integrals (the exponents of the propagator) and
/// the ground-level feed integrals. Tables are immutable once built;
/// lookups interpolate linearly.
class LambdaDynamics {
 public:
  static LambdaDynamics from_params(const LambdaParams& p, const Grid& grid);
  /// Synthetic variant driven by explicit rate profiles (no Lamb shift);
  /// used to exercise the propagator against closed forms.
  static LambdaDynamics from_profiles(const RateProfile& gamma1,
                                      const RateProfile& gamma2,
                                      const Grid& grid);

  const Grid& grid() const { return gamma1_.grid; }
  const Series& gamma1() const { return gamma1_; }
  const Series& gamma2() const { return gamma2_; }
  const Series& lambda1() const { return lambda1_; }
  const Series& lambda2() const { return lambda2_; }

  LambdaRates rates_at(double t) const;
  /// damping(t) = int_0^t (gamma1 + gamma2), the population decay exponent.
  double damping_sum_at(double t) const;
  /// phase(t) = int_0^t (lambda1 + lambda2), the coherence phase exponent.
  double phase_sum_at(double t) const;
  double feed1_at(double t) const;
  double feed2_at(double t) const;

 private:
  LambdaDynamics(Series g1, Series g2, Series l1, Series l2);
  static double interp(const Series& s, double t);
  void build_derived();

  Series gamma1_, gamma2_, lambda1_, lambda2_;
  Series damping_sum_, phase_sum_, feed1_, feed2_;
};

/// Memory kernel of channel i (1 or 2) at time separation s: the inner
/// frequency integral by adaptive quadrature over the truncated window.
double lambda_kernel(const LambdaParams& p, int channel, double s,
                     bool sine = false);

/// Rates at time t, computed on a dt = 1e-3 grid from scratch. Series
/// workflows should build a LambdaDynamics once instead.
LambdaRates lambda_rates(const LambdaParams& p, double t);

DensityMatrix lambda_evolve(const LambdaDynamics& dyn,
                            const DensityMatrix& rho0, double t);
DensityMatrix lambda_evolve(const LambdaParams& p, const DensityMatrix& rho0,
                            double t);

struct HssChi {
  double hss;
  double chi;
};

/// Closed forms for the phase-probe family (e^{i phi}|a> + |b> + |c>)/sqrt(3):
///   hss(t) = (sqrt(2)/3) e^{-damping(t)/2}
///   chi(t) = -(gamma1(t) + gamma2(t))/(3 sqrt(2)) e^{-damping(t)/2}
HssChi lambda_hss_and_chi(const LambdaDynamics& dyn, double t);
HssChi lambda_hss_and_chi(const LambdaParams& p, double t);

/// Phase-probe family state.
DensityMatrix lambda_probe_state(double phi);

/// BLP pair (|a> +- |b>)/sqrt(2); its trace distance decays as
/// e^{-damping(t)/2}, so its derivative changes sign exactly with chi.
DensityMatrix lambda_blp_plus();
DensityMatrix lambda_blp_minus();

Series lambda_hss_series(const LambdaDynamics& dyn);
Series lambda_distance_series(const LambdaDynamics& dyn);
Series lambda_chi_series_closed(const LambdaDynamics& dyn);

}  // namespace hss::models
