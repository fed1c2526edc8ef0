#include "hss/speed.hpp"

namespace hss {

double quantum_distance(const DensityMatrix& rho, const DensityMatrix& sigma,
                        Alpha alpha) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("quantum_distance: states have different dims");
  }
  const ComplexMatrix diff = rho.matrix() - sigma.matrix();
  const Eigen::VectorXd ev = herm_eig(diff).eigenvalues;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    acc += std::pow(std::abs(ev(i)), alpha.value);
  }
  return std::pow(0.5 * acc, 1.0 / alpha.value);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return quantum_distance(rho, sigma, Alpha(1.0));
}

double hilbert_schmidt_distance(const DensityMatrix& rho,
                                const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("hilbert_schmidt_distance: states have different dims");
  }
  return (rho.matrix() - sigma.matrix()).norm();
}

double statistical_speed(const Eigen::Ref<const ComplexMatrix>& drho_dphi,
                         Alpha alpha) {
  const double asym = (drho_dphi - drho_dphi.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kHermReject) {
    throw NonHermitianInput("statistical_speed: derivative not Hermitian", asym);
  }
  const double tr = std::abs(drho_dphi.trace());
  if (tr > 1e-10) {
    throw NonTracelessInput("statistical_speed: derivative not traceless", tr);
  }
  const Eigen::VectorXd ev = herm_eig(drho_dphi).eigenvalues;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    acc += std::pow(std::abs(ev(i)), alpha.value);
  }
  return std::pow(0.5 * acc, 1.0 / alpha.value);
}

double hss_from_derivative(const Eigen::Ref<const ComplexMatrix>& drho_dphi) {
  const double asym = (drho_dphi - drho_dphi.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kHermReject) {
    throw NonHermitianInput("hss_from_derivative: input not Hermitian", asym);
  }
  return drho_dphi.norm() / std::sqrt(2.0);
}

DensityMatrix phase_probe_state(Eigen::Index dim, double phi) {
  if (dim < 2) throw std::invalid_argument("phase_probe_state: dim must be >= 2");
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(dim);
  v(0) = std::polar(1.0, phi);
  v /= std::sqrt(static_cast<double>(dim));
  return DensityMatrix::validated(v * v.adjoint());
}

}  // namespace hss
