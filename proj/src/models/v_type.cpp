#include "hss/models/v_type.hpp"

#include <cmath>

namespace hss::models {

namespace {

Complex amplitude(double lambda, double gamma, double branch_weight, double t) {
  const Complex d = std::sqrt(
      Complex(lambda * lambda - 2.0 * lambda * gamma * branch_weight, 0.0));
  if (std::abs(d) < 1e-12 * lambda) {
    return std::exp(-0.5 * lambda * t) * (1.0 + 0.5 * lambda * t);
  }
  const Complex half = 0.5 * t * d;
  return std::exp(-0.5 * lambda * t) *
         (std::cosh(half) + (lambda / d) * std::sinh(half));
}

}  // namespace

GPair vtype_G(const VTypeParams& p, double t) {
  if (t < 0.0) throw std::invalid_argument("vtype_G: t must be >= 0");
  return {amplitude(p.lambda, p.gamma, 1.0 + std::abs(p.theta), t),
          amplitude(p.lambda, p.gamma, 1.0 - std::abs(p.theta), t)};
}

std::array<ComplexMatrix, 3> vtype_kraus(Complex gp, Complex gm) {
  const double ap = std::abs(gp), am = std::abs(gm);
  if (ap > 1.0 + 1e-10 || am > 1.0 + 1e-10) {
    throw NonContractiveAmplitude("vtype_kraus: |G| exceeds 1",
                                  std::max(ap, am) - 1.0);
  }
  std::array<ComplexMatrix, 3> k;
  k[0] = ComplexMatrix::Zero(3, 3);
  k[0](0, 0) = gp;
  k[0](1, 1) = gm;
  k[0](2, 2) = 1.0;
  k[1] = ComplexMatrix::Zero(3, 3);
  k[1](2, 0) = std::sqrt(std::max(0.0, 1.0 - ap * ap));
  k[2] = ComplexMatrix::Zero(3, 3);
  k[2](2, 1) = std::sqrt(std::max(0.0, 1.0 - am * am));
  return k;
}

DensityMatrix vtype_evolve(const VTypeParams& p, const DensityMatrix& rho0,
                           double t) {
  if (rho0.dim() != 3) {
    throw DimensionMismatch("vtype_evolve: state must be 3x3");
  }
  const GPair g = vtype_G(p, t);
  const auto kraus = vtype_kraus(g.g_plus, g.g_minus);
  ComplexMatrix out = ComplexMatrix::Zero(3, 3);
  for (const auto& k : kraus) out += k * rho0.matrix() * k.adjoint();
  return DensityMatrix::validated(out, tol::kModelState);
}

HssAndDistance3 vtype_hss_and_D(const VTypeParams& p, double t) {
  const GPair g = vtype_G(p, t);
  const double ap = std::abs(g.g_plus), am = std::abs(g.g_minus);
  return {(1.0 / 3.0) * ap * std::sqrt(am * am + 1.0), ap};
}

DensityMatrix vtype_probe_state(double phi) {
  Eigen::Vector3cd v;
  v << std::polar(1.0, phi), 1.0, 1.0;
  v /= std::sqrt(3.0);
  return DensityMatrix::validated(v * v.adjoint());
}

namespace {

DensityMatrix superposition_13(double sign) {
  Eigen::Vector3cd v;
  v << 1.0, 0.0, sign;
  v /= std::sqrt(2.0);
  return DensityMatrix::validated(v * v.adjoint());
}

}  // namespace

DensityMatrix vtype_blp_plus() { return superposition_13(1.0); }
DensityMatrix vtype_blp_minus() { return superposition_13(-1.0); }

Series vtype_hss_series(const VTypeParams& p, const Grid& grid) {
  Eigen::ArrayXd out(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    out(i) = vtype_hss_and_D(p, grid.time(i)).hss;
  }
  return Series(grid, std::move(out));
}

Series vtype_distance_series(const VTypeParams& p, const Grid& grid) {
  Eigen::ArrayXd out(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    out(i) = vtype_hss_and_D(p, grid.time(i)).trace_distance;
  }
  return Series(grid, std::move(out));
}

Series vtype_abs_g_series(const VTypeParams& p, const Grid& grid, bool plus) {
  Eigen::ArrayXd out(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    const GPair g = vtype_G(p, grid.time(i));
    out(i) = std::abs(plus ? g.g_plus : g.g_minus);
  }
  return Series(grid, std::move(out));
}

}  // namespace hss::models
