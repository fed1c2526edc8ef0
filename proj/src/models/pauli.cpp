#include "hss/models/pauli.hpp"

#include <cmath>

namespace hss::models {

namespace {

std::array<double, 3> rate_integrals(const PauliParams& p, double t) {
  return {integrate_adaptive([&](double s) { return p.gamma1(s); }, 0.0, t,
                             tol::kQuadTol),
          integrate_adaptive([&](double s) { return p.gamma2(s); }, 0.0, t,
                             tol::kQuadTol),
          integrate_adaptive([&](double s) { return p.gamma3(s); }, 0.0, t,
                             tol::kQuadTol)};
}

std::array<double, 3> decays_from_integrals(const std::array<double, 3>& r) {
  return {std::exp(-2.0 * (r[1] + r[2])), std::exp(-2.0 * (r[0] + r[2])),
          std::exp(-2.0 * (r[0] + r[1]))};
}

const ComplexMatrix& sigma(int i) {
  static const std::array<ComplexMatrix, 4> mats = [] {
    std::array<ComplexMatrix, 4> m;
    m[0] = ComplexMatrix::Identity(2, 2);
    m[1] = ComplexMatrix(2, 2);
    m[1] << 0, 1, 1, 0;
    m[2] = ComplexMatrix(2, 2);
    m[2] << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    m[3] = ComplexMatrix(2, 2);
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return mats[static_cast<size_t>(i)];
}

int probe_axis(PauliProbe probe) {
  switch (probe) {
    case PauliProbe::XPlus0: return 1;        // lam2, sigma_y direction
    case PauliProbe::XPlusHalfPi: return 2;   // lam3, sigma_z direction
    case PauliProbe::XMinusHalfPi: return 0;  // lam1, sigma_x direction
  }
  return 0;
}

}  // namespace

std::array<double, 3> pauli_axis_decays(const PauliParams& p, double t) {
  return decays_from_integrals(rate_integrals(p, t));
}

std::array<double, 4> pauli_probabilities(const PauliParams& p, double t) {
  const auto lam = pauli_axis_decays(p, t);
  const std::array<double, 4> probs = {
      0.25 * (1.0 + lam[0] + lam[1] + lam[2]),
      0.25 * (1.0 + lam[0] - lam[1] - lam[2]),
      0.25 * (1.0 + lam[1] - lam[0] - lam[2]),
      0.25 * (1.0 + lam[2] - lam[1] - lam[0])};
  for (double pi : probs) {
    if (pi < -1e-10) {
      throw NotAProbability("pauli channel weight went negative", pi);
    }
  }
  const double sum = probs[0] + probs[1] + probs[2] + probs[3];
  if (std::abs(sum - 1.0) > 1e-10) {
    throw NotAProbability("pauli channel weights do not sum to one", sum);
  }
  return probs;
}

DensityMatrix pauli_evolve(const PauliParams& p, const DensityMatrix& rho0,
                           double t) {
  if (rho0.dim() != 2) {
    throw DimensionMismatch("pauli_evolve: state must be 2x2");
  }
  const auto probs = pauli_probabilities(p, t);
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 4; ++i) {
    out += probs[static_cast<size_t>(i)] * sigma(i) * rho0.matrix() * sigma(i);
  }
  return DensityMatrix::validated(out, tol::kModelState);
}

double pauli_chi(const PauliParams& p, PauliProbe probe, double t) {
  const auto r = rate_integrals(p, t);
  const double g1 = p.gamma1(t), g2 = p.gamma2(t), g3 = p.gamma3(t);
  switch (probe) {
    case PauliProbe::XPlus0:
      return -(g1 + g3) * std::exp(-2.0 * r[0] - 2.0 * r[2]);
    case PauliProbe::XPlusHalfPi:
      return -(g1 + g2) * std::exp(-2.0 * r[0] - 2.0 * r[1]);
    case PauliProbe::XMinusHalfPi:
      return -(g2 + g3) * std::exp(-2.0 * r[1] - 2.0 * r[2]);
  }
  return 0.0;
}

double pauli_hss(const PauliParams& p, PauliProbe probe, double t) {
  return 0.5 * pauli_axis_decays(p, t)[static_cast<size_t>(probe_axis(probe))];
}

double pauli_trace_distance(const PauliParams& p, PauliProbe probe, double t) {
  return pauli_axis_decays(p, t)[static_cast<size_t>(probe_axis(probe))];
}

DensityMatrix pauli_probe_state(PauliProbe probe, double phi) {
  const Complex e = std::polar(1.0, phi);
  Eigen::Vector2cd psi;  // components (c_excited, c_ground)
  switch (probe) {
    case PauliProbe::XPlus0:
      psi << Complex(1.0, 0.0), e;
      break;
    case PauliProbe::XPlusHalfPi:
      psi << 0.5 * (e - 1.0), 0.5 * (e + 1.0);
      break;
    case PauliProbe::XMinusHalfPi:
      psi << Complex(-1.0, 0.0), e;
      break;
  }
  if (probe != PauliProbe::XPlusHalfPi) psi /= std::sqrt(2.0);
  return DensityMatrix::validated(psi * psi.adjoint());
}

PauliTables pauli_tables(const PauliParams& p, const Grid& grid) {
  return PauliTables{
      cumulative_adaptive([&](double s) { return p.gamma1(s); }, grid),
      cumulative_adaptive([&](double s) { return p.gamma2(s); }, grid),
      cumulative_adaptive([&](double s) { return p.gamma3(s); }, grid)};
}

namespace {

Eigen::ArrayXd decay_series(const PauliTables& t, int axis) {
  switch (axis) {
    case 0: return (-2.0 * (t.r2.values + t.r3.values)).exp();
    case 1: return (-2.0 * (t.r1.values + t.r3.values)).exp();
    default: return (-2.0 * (t.r1.values + t.r2.values)).exp();
  }
}

}  // namespace

Series pauli_hss_series(const PauliTables& tables, PauliProbe probe) {
  return Series(tables.r1.grid, 0.5 * decay_series(tables, probe_axis(probe)));
}

Series pauli_distance_series(const PauliTables& tables, PauliProbe probe) {
  return Series(tables.r1.grid, decay_series(tables, probe_axis(probe)));
}

Series pauli_chi_series_closed(const PauliParams& p, const PauliTables& tables,
                               PauliProbe probe) {
  const Grid& grid = tables.r1.grid;
  Eigen::ArrayXd decay = decay_series(tables, probe_axis(probe));
  Eigen::ArrayXd out(grid.n);
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    const double s = grid.time(i);
    double pair = 0.0;
    switch (probe) {
      case PauliProbe::XPlus0: pair = p.gamma1(s) + p.gamma3(s); break;
      case PauliProbe::XPlusHalfPi: pair = p.gamma1(s) + p.gamma2(s); break;
      case PauliProbe::XMinusHalfPi: pair = p.gamma2(s) + p.gamma3(s); break;
    }
    out(i) = -pair * decay(i);
  }
  return Series(grid, std::move(out));
}

}  // namespace hss::models
