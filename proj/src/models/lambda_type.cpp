#include "hss/models/lambda_type.hpp"

#include <cmath>

namespace hss::models {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_params(const LambdaParams& p) {
  if (!(p.gamma0 > 0.0) || !(p.lambda > 0.0) || !(p.omega_cav > 0.0)) {
    throw std::invalid_argument(
        "lambda_type: gamma0, lambda, omega_cav must be > 0");
  }
  if (!(p.trunc_k > 0.0)) {
    throw std::invalid_argument("lambda_type: trunc_k must be > 0");
  }
}

// Base integrals over the truncated window, in the shifted variable
// u = omega - omega_cav:
//   C(s) = int Jt(u) cos(u s) du,  S(s) = int Jt(u) sin(u s) du,
// with Jt(u) = (gamma0/2pi) lambda^2 / (u^2 + lambda^2). Channel kernels
// follow by the angle shift:
//   cos-kernel_i = cos(delta_i s) C + sin(delta_i s) S
//   sin-kernel_i = cos(delta_i s) S - sin(delta_i s) C
// The window is chunked so each chunk sees less than a quarter oscillation
// before adaptive refinement; S vanishes by symmetry when the window is not
// clipped at omega = 0.
struct BaseKernels {
  double c;
  double s;
};

BaseKernels base_kernels(const LambdaParams& p, double s) {
  const double lo = std::max(0.0, p.omega_cav - p.trunc_k * p.lambda) - p.omega_cav;
  const double hi = p.trunc_k * p.lambda;
  const bool symmetric = lo == -hi;
  const double width = hi - lo;
  const double chunk =
      std::min(0.5 * p.lambda, kPi / (4.0 * std::abs(s) + 1e-30));
  const int n_chunks =
      std::max(1, std::min(200000, static_cast<int>(std::ceil(width / chunk))));
  const double h = width / n_chunks;
  const double per_chunk_tol = tol::kQuadTol / n_chunks;
  const double norm = p.gamma0 / (2.0 * kPi) * p.lambda * p.lambda;

  double c = 0.0, sv = 0.0;
  for (int k = 0; k < n_chunks; ++k) {
    const double a = lo + k * h;
    const double b = (k + 1 == n_chunks) ? hi : lo + (k + 1) * h;
    c += integrate_adaptive(
        [&](double u) { return norm / (u * u + p.lambda * p.lambda) * std::cos(u * s); },
        a, b, per_chunk_tol);
    if (!symmetric) {
      sv += integrate_adaptive(
          [&](double u) { return norm / (u * u + p.lambda * p.lambda) * std::sin(u * s); },
          a, b, per_chunk_tol);
    }
  }
  return {c, sv};
}

double channel_kernel(const BaseKernels& base, double delta, double s,
                      bool sine) {
  const double cd = std::cos(delta * s), sd = std::sin(delta * s);
  return sine ? cd * base.s - sd * base.c : cd * base.c + sd * base.s;
}

}  // namespace

double lambda_kernel(const LambdaParams& p, int channel, double s, bool sine) {
  check_params(p);
  if (channel != 1 && channel != 2) {
    throw std::invalid_argument("lambda_kernel: channel must be 1 or 2");
  }
  const BaseKernels base = base_kernels(p, s);
  return channel_kernel(base, channel == 1 ? p.delta1 : p.delta2, s, sine);
}

LambdaDynamics::LambdaDynamics(Series g1, Series g2, Series l1, Series l2)
    : gamma1_(std::move(g1)),
      gamma2_(std::move(g2)),
      lambda1_(std::move(l1)),
      lambda2_(std::move(l2)),
      damping_sum_(gamma1_.grid, Eigen::ArrayXd::Zero(gamma1_.grid.n)),
      phase_sum_(gamma1_.grid, Eigen::ArrayXd::Zero(gamma1_.grid.n)),
      feed1_(gamma1_.grid, Eigen::ArrayXd::Zero(gamma1_.grid.n)),
      feed2_(gamma1_.grid, Eigen::ArrayXd::Zero(gamma1_.grid.n)) {
  build_derived();
}

void LambdaDynamics::build_derived() {
  const Grid& g = gamma1_.grid;
  damping_sum_ =
      cumulative_integral(Series(g, gamma1_.values + gamma2_.values));
  phase_sum_ =
      cumulative_integral(Series(g, lambda1_.values + lambda2_.values));

  // Ground-level feeds: per step, (gamma1+gamma2) e^{-damping} integrates in
  // closed form to e^{-D_i} - e^{-D_{i+1}}; splitting that increment by the
  // averaged channel ratio keeps the total population exact to rounding
  // while each feed stays second-order accurate.
  const Eigen::ArrayXd weight = (-damping_sum_.values).exp();
  Eigen::ArrayXd f1(g.n), f2(g.n);
  f1(0) = 0.0;
  f2(0) = 0.0;
  const auto ratio1 = [&](Eigen::Index i) {
    const double sum = gamma1_.values(i) + gamma2_.values(i);
    return std::abs(sum) > 1e-300 ? gamma1_.values(i) / sum : 0.5;
  };
  for (Eigen::Index i = 1; i < g.n; ++i) {
    const double inc = weight(i - 1) - weight(i);
    if (std::abs(damping_sum_.values(i) - damping_sum_.values(i - 1)) >
        1e-14) {
      const double r1 = 0.5 * (ratio1(i - 1) + ratio1(i));
      f1(i) = f1(i - 1) + r1 * inc;
      f2(i) = f2(i - 1) + (1.0 - r1) * inc;
    } else {
      // Nearly cancelling rates: plain trapezoid on each channel.
      const double h = 0.5 * g.dt;
      f1(i) = f1(i - 1) + h * (gamma1_.values(i - 1) * weight(i - 1) +
                               gamma1_.values(i) * weight(i));
      f2(i) = f2(i - 1) + h * (gamma2_.values(i - 1) * weight(i - 1) +
                               gamma2_.values(i) * weight(i));
    }
  }
  feed1_ = Series(g, std::move(f1));
  feed2_ = Series(g, std::move(f2));
}

LambdaDynamics LambdaDynamics::from_params(const LambdaParams& p,
                                           const Grid& grid) {
  check_params(p);
  Eigen::ArrayXd k1c(grid.n), k2c(grid.n), k1s(grid.n), k2s(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    const double s = grid.time(i);
    const BaseKernels base = base_kernels(p, s);
    k1c(i) = channel_kernel(base, p.delta1, s, false);
    k2c(i) = channel_kernel(base, p.delta2, s, false);
    k1s(i) = channel_kernel(base, p.delta1, s, true);
    k2s(i) = channel_kernel(base, p.delta2, s, true);
  }
  Series g1 = cumulative_integral(Series(grid, std::move(k1c)));
  Series g2 = cumulative_integral(Series(grid, std::move(k2c)));
  Series l1 = cumulative_integral(Series(grid, std::move(k1s)));
  Series l2 = cumulative_integral(Series(grid, std::move(k2s)));
  return LambdaDynamics(std::move(g1), std::move(g2), std::move(l1),
                        std::move(l2));
}

LambdaDynamics LambdaDynamics::from_profiles(const RateProfile& gamma1,
                                             const RateProfile& gamma2,
                                             const Grid& grid) {
  Eigen::ArrayXd g1(grid.n), g2(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    g1(i) = gamma1(grid.time(i));
    g2(i) = gamma2(grid.time(i));
  }
  return LambdaDynamics(Series(grid, std::move(g1)), Series(grid, std::move(g2)),
                        Series(grid, Eigen::ArrayXd::Zero(grid.n)),
                        Series(grid, Eigen::ArrayXd::Zero(grid.n)));
}

double LambdaDynamics::interp(const Series& s, double t) {
  const Grid& g = s.grid;
  const double pos = (t - g.t0) / g.dt;
  if (pos < -1e-9 || pos > static_cast<double>(g.n - 1) + 1e-9) {
    throw std::invalid_argument("LambdaDynamics: time outside table range");
  }
  const Eigen::Index i = std::min<Eigen::Index>(
      g.n - 2, std::max<Eigen::Index>(0, static_cast<Eigen::Index>(pos)));
  const double frac = pos - static_cast<double>(i);
  return s.values(i) + frac * (s.values(i + 1) - s.values(i));
}

LambdaRates LambdaDynamics::rates_at(double t) const {
  return {interp(gamma1_, t), interp(gamma2_, t), interp(lambda1_, t),
          interp(lambda2_, t)};
}

double LambdaDynamics::damping_sum_at(double t) const {
  return interp(damping_sum_, t);
}
double LambdaDynamics::phase_sum_at(double t) const {
  return interp(phase_sum_, t);
}
double LambdaDynamics::feed1_at(double t) const { return interp(feed1_, t); }
double LambdaDynamics::feed2_at(double t) const { return interp(feed2_, t); }

namespace {

Grid default_grid_to(double t) {
  const double dt = tol::kDefaultDt;
  const auto n = static_cast<Eigen::Index>(std::ceil(t / dt - 1e-9)) + 1;
  return Grid(0.0, dt, std::max<Eigen::Index>(3, n));
}

}  // namespace

LambdaRates lambda_rates(const LambdaParams& p, double t) {
  if (t < 0.0) throw std::invalid_argument("lambda_rates: t must be >= 0");
  return LambdaDynamics::from_params(p, default_grid_to(t)).rates_at(t);
}

DensityMatrix lambda_evolve(const LambdaDynamics& dyn,
                            const DensityMatrix& rho0, double t) {
  if (rho0.dim() != 3) {
    throw DimensionMismatch("lambda_evolve: state must be 3x3");
  }
  const ComplexMatrix& r = rho0.matrix();
  const double damping = dyn.damping_sum_at(t);
  const double phase = dyn.phase_sum_at(t);
  const double pop = std::exp(-damping);
  const Complex coh = std::exp(Complex(-0.5 * damping, -phase));

  ComplexMatrix out(3, 3);
  out(0, 0) = r(0, 0) * pop;
  out(1, 1) = r(0, 0).real() * dyn.feed1_at(t) + r(1, 1);
  out(2, 2) = r(0, 0).real() * dyn.feed2_at(t) + r(2, 2);
  out(0, 1) = r(0, 1) * coh;
  out(0, 2) = r(0, 2) * coh;
  out(1, 2) = r(1, 2);
  out(1, 0) = std::conj(out(0, 1));
  out(2, 0) = std::conj(out(0, 2));
  out(2, 1) = std::conj(out(1, 2));
  return DensityMatrix::validated(out, tol::kModelState);
}

DensityMatrix lambda_evolve(const LambdaParams& p, const DensityMatrix& rho0,
                            double t) {
  return lambda_evolve(LambdaDynamics::from_params(p, default_grid_to(t)), rho0,
                       t);
}

HssChi lambda_hss_and_chi(const LambdaDynamics& dyn, double t) {
  const double envelope = std::exp(-0.5 * dyn.damping_sum_at(t));
  const LambdaRates r = dyn.rates_at(t);
  const double root2 = std::sqrt(2.0);
  return {root2 / 3.0 * envelope,
          -(r.gamma1 + r.gamma2) / (3.0 * root2) * envelope};
}

HssChi lambda_hss_and_chi(const LambdaParams& p, double t) {
  return lambda_hss_and_chi(LambdaDynamics::from_params(p, default_grid_to(t)),
                            t);
}

DensityMatrix lambda_probe_state(double phi) {
  Eigen::Vector3cd v;
  v << std::polar(1.0, phi), 1.0, 1.0;
  v /= std::sqrt(3.0);
  return DensityMatrix::validated(v * v.adjoint());
}

namespace {

DensityMatrix superposition_ab(double sign) {
  Eigen::Vector3cd v;
  v << 1.0, sign, 0.0;
  v /= std::sqrt(2.0);
  return DensityMatrix::validated(v * v.adjoint());
}

}  // namespace

DensityMatrix lambda_blp_plus() { return superposition_ab(1.0); }
DensityMatrix lambda_blp_minus() { return superposition_ab(-1.0); }

Series lambda_hss_series(const LambdaDynamics& dyn) {
  const Grid& g = dyn.grid();
  Eigen::ArrayXd out(g.n);
  for (Eigen::Index i = 0; i < g.n; ++i) {
    out(i) = lambda_hss_and_chi(dyn, g.time(i)).hss;
  }
  return Series(g, std::move(out));
}

Series lambda_distance_series(const LambdaDynamics& dyn) {
  const Grid& g = dyn.grid();
  Eigen::ArrayXd out(g.n);
  for (Eigen::Index i = 0; i < g.n; ++i) {
    out(i) = std::exp(-0.5 * dyn.damping_sum_at(g.time(i)));
  }
  return Series(g, std::move(out));
}

Series lambda_chi_series_closed(const LambdaDynamics& dyn) {
  const Grid& g = dyn.grid();
  Eigen::ArrayXd out(g.n);
  for (Eigen::Index i = 0; i < g.n; ++i) {
    out(i) = lambda_hss_and_chi(dyn, g.time(i)).chi;
  }
  return Series(g, std::move(out));
}

}  // namespace hss::models
