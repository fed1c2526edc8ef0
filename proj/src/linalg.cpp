#include "hss/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace hss {

namespace {

double hermitian_asymmetry(const Eigen::Ref<const ComplexMatrix>& M) {
  return (M - M.adjoint()).cwiseAbs().maxCoeff();
}

// Phase-gauge each eigenvector: first component with magnitude above 1e-12
// is made real positive. Keeps the output deterministic.
void normalize_phases(ComplexMatrix& V) {
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    for (Eigen::Index r = 0; r < V.rows(); ++r) {
      const Complex v = V(r, c);
      if (std::abs(v) > 1e-12) {
        V.col(c) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
}

}  // namespace

HermEigen herm_eig(const Eigen::Ref<const ComplexMatrix>& H) {
  const Eigen::Index n = H.rows();
  if (n < 1 || H.cols() != n) {
    throw std::invalid_argument("herm_eig: matrix must be square, dim >= 1");
  }
  if (n > 8) {
    throw std::invalid_argument("herm_eig: dims > 8 unsupported");
  }
  const double asym = hermitian_asymmetry(H);
  if (asym > tol::kHermReject) {
    throw NonHermitianInput("herm_eig: input not Hermitian", asym);
  }

  ComplexMatrix A = 0.5 * (H + H.adjoint().eval());
  ComplexMatrix V = ComplexMatrix::Identity(n, n);
  const double scale = std::max(1.0, A.norm());

  bool converged = false;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps && !converged; ++sweep) {
    double off2 = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off2 += std::norm(A(p, q));
    if (std::sqrt(off2) <= 1e-15 * scale) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex g = A(p, q);
        const double ag = std::abs(g);
        if (ag <= 1e-18 * scale) continue;
        const Complex phase = g / ag;
        // Rotation angle for the phase-absorbed real symmetric 2x2 block.
        const double theta = (A(q, q).real() - A(p, p).real()) / (2.0 * ag);
        const double sgn = theta >= 0.0 ? 1.0 : -1.0;
        const double t = sgn / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sp = s * phase;

        // A <- U^H A U with U acting on the (p,q) plane:
        //   U(p,p)=c, U(p,q)=s*phase, U(q,p)=-s*conj(phase), U(q,q)=c.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - sp * aqk;
          A(q, k) = std::conj(sp) * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - std::conj(sp) * akq;
          A(k, q) = sp * akp + c * akq;
        }
        A(p, q) = Complex(0, 0);
        A(q, p) = Complex(0, 0);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - std::conj(sp) * vkq;
          V(k, q) = sp * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    double off2 = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off2 += std::norm(A(p, q));
    if (std::sqrt(off2) > 1e-13 * scale) {
      throw ConvergenceFailure("herm_eig: no convergence within sweep budget");
    }
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return A(a, a).real() < A(b, b).real();
  });

  HermEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = A(order[static_cast<size_t>(i)], order[static_cast<size_t>(i)]).real();
    out.eigenvectors.col(i) = V.col(order[static_cast<size_t>(i)]);
  }
  normalize_phases(out.eigenvectors);
  return out;
}

double trace_norm(const Eigen::Ref<const ComplexMatrix>& M) {
  return herm_eig(M).eigenvalues.cwiseAbs().sum();
}

namespace {

// Returns the first violated invariant, or nothing. Checks hermiticity,
// then trace, then positivity.
struct Violation {
  StateViolation kind;
  double magnitude;
};

std::pair<bool, Violation> check_state(const ComplexMatrix& M, double herm_tol,
                                       double trace_tol, double psd_tol) {
  if (M.rows() != M.cols()) {
    return {false, {StateViolation::Hermiticity, -1.0}};
  }
  const double asym = (M - M.adjoint()).cwiseAbs().maxCoeff();
  if (asym > herm_tol) return {false, {StateViolation::Hermiticity, asym}};
  const double trace_dev = std::abs(M.trace() - Complex(1.0, 0.0));
  if (trace_dev > trace_tol) return {false, {StateViolation::Trace, trace_dev}};
  const double min_eig = herm_eig(M).eigenvalues.minCoeff();
  if (min_eig < -psd_tol) {
    return {false, {StateViolation::Positivity, -min_eig}};
  }
  return {true, {StateViolation::Positivity, 0.0}};
}

}  // namespace

DensityMatrix DensityMatrix::validated(const ComplexMatrix& m) {
  auto [ok, v] = check_state(m, tol::kHermiticity, tol::kUnitTrace, tol::kPositivity);
  if (!ok) throw NotAState(v.kind, v.magnitude);
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::validated(const ComplexMatrix& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("validate_density: tol must be > 0");
  auto [ok, v] = check_state(m, tol, tol, tol);
  if (!ok) throw NotAState(v.kind, v.magnitude);
  return DensityMatrix(m);
}

DensityMatrix validate_density(const ComplexMatrix& M, double tol) {
  return DensityMatrix::validated(M, tol);
}

}  // namespace hss
