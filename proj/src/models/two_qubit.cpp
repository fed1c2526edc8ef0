#include "hss/models/two_qubit.hpp"

#include <cmath>

namespace hss::models {

namespace {

void check_params(const TwoQubitParams& p) {
  if (!(p.gamma0 > 0.0) || !(p.lambda > 0.0)) {
    throw std::invalid_argument("two_qubit: gamma0 and lambda must be > 0");
  }
}

}  // namespace

double two_qubit_P(const TwoQubitParams& p, double t) {
  check_params(p);
  if (t < 0.0) throw std::invalid_argument("two_qubit_P: t must be >= 0");
  const double disc = 2.0 * p.gamma0 * p.lambda - p.lambda * p.lambda;
  const Complex rate = std::sqrt(Complex(disc, 0.0));
  double bracket;
  if (std::abs(rate) < 1e-12 * p.lambda) {
    bracket = 1.0 + 0.5 * p.lambda * t;
  } else {
    // cos/sin for real rate, cosh/sinh for imaginary; real either way.
    bracket = (std::cos(rate * (0.5 * t)) +
               (p.lambda / rate) * std::sin(rate * (0.5 * t)))
                  .real();
  }
  return std::exp(-p.lambda * t) * bracket * bracket;
}

DensityMatrix two_qubit_evolve(const TwoQubitParams& p,
                               const DensityMatrix& rho0, double t) {
  if (rho0.dim() != 4) {
    throw DimensionMismatch("two_qubit_evolve: state must be 4x4");
  }
  const double P = two_qubit_P(p, t);
  const double sp = std::sqrt(P);
  const ComplexMatrix& r = rho0.matrix();
  ComplexMatrix out(4, 4);
  out(0, 0) = r(0, 0) * P * P;
  out(1, 1) = r(1, 1) * P + r(0, 0) * P * (1.0 - P);
  out(2, 2) = r(2, 2) * P + r(0, 0) * P * (1.0 - P);
  out(3, 3) = 1.0 - out(0, 0) - out(1, 1) - out(2, 2);
  out(0, 1) = r(0, 1) * P * sp;
  out(0, 2) = r(0, 2) * P * sp;
  out(0, 3) = r(0, 3) * P;
  out(1, 2) = r(1, 2) * P;
  out(1, 3) = sp * (r(1, 3) + r(0, 2) * (1.0 - P));
  out(2, 3) = sp * (r(2, 3) + r(0, 1) * (1.0 - P));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) out(i, j) = std::conj(out(j, i));
  }
  return DensityMatrix::validated(out, tol::kModelState);
}

double two_qubit_hss_of_coherence(double P) {
  return 0.25 * std::sqrt(P * (P * (4.0 * P - 3.0) + 2.0));
}

double two_qubit_distance_of_coherence(double P) {
  return std::sqrt(P * (2.0 - 2.0 * P + P * P));
}

HssAndDistance two_qubit_hss_and_D(const TwoQubitParams& p, double t) {
  const double P = two_qubit_P(p, t);
  return {two_qubit_hss_of_coherence(P), two_qubit_distance_of_coherence(P)};
}

DensityMatrix two_qubit_probe_state(double phi) {
  Eigen::Vector4cd v;
  v << std::polar(0.5, phi), 0.5, 0.5, 0.5;
  return DensityMatrix::validated(v * v.adjoint());
}

namespace {

DensityMatrix product_pure(const Eigen::Vector2cd& q) {
  const Eigen::Vector4cd v = kron(q, q).col(0);
  return DensityMatrix::validated(v * v.adjoint());
}

}  // namespace

DensityMatrix two_qubit_blp_plus() {
  // |+> = (|0> + |1>)/sqrt(2): components (1, 1)/sqrt(2) in {|1>, |0>}.
  return product_pure(Eigen::Vector2cd(1.0, 1.0) / std::sqrt(2.0));
}

DensityMatrix two_qubit_blp_minus() {
  // |-> = (|0> - |1>)/sqrt(2): components (-1, 1)/sqrt(2).
  return product_pure(Eigen::Vector2cd(-1.0, 1.0) / std::sqrt(2.0));
}

Series two_qubit_P_series(const TwoQubitParams& p, const Grid& grid) {
  Eigen::ArrayXd out(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) out(i) = two_qubit_P(p, grid.time(i));
  return Series(grid, std::move(out));
}

Series two_qubit_hss_series(const TwoQubitParams& p, const Grid& grid) {
  Eigen::ArrayXd out(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    out(i) = two_qubit_hss_of_coherence(two_qubit_P(p, grid.time(i)));
  }
  return Series(grid, std::move(out));
}

Series two_qubit_distance_series(const TwoQubitParams& p, const Grid& grid) {
  Eigen::ArrayXd out(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    out(i) = two_qubit_distance_of_coherence(two_qubit_P(p, grid.time(i)));
  }
  return Series(grid, std::move(out));
}

}  // namespace hss::models
