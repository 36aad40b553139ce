#include "cmm/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "cmm/errors.hpp"

namespace cmm {

StabilityReport stability(const Mat8& M, double scale) {
  if (!M.allFinite()) throw NumericalError("drift matrix has non-finite entries");
  Eigen::EigenSolver<Mat8> solver(M, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue iteration did not converge");

  StabilityReport report;
  report.max_real_eig = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 8; ++i) {
    report.eigenvalues[i] = solver.eigenvalues()(i);
    report.max_real_eig = std::max(report.max_real_eig, report.eigenvalues[i].real());
  }
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  report.stable = report.max_real_eig < 0.0;
  report.marginal = std::abs(report.max_real_eig) <= 1e-9 * scale;
  return report;
}

double lyapunov_residual(const Mat8& M, const Mat8& D, const Mat8& V) {
  const double d_norm = D.norm();
  const double r_norm = (M * V + V * M.transpose() + D).norm();
  return d_norm > 0.0 ? r_norm / d_norm : r_norm;
}

CovarianceMatrix solve_lyapunov(const Mat8& M, const Mat8& D) {
  const StabilityReport stab = stability(M);
  if (!stab.stable) {
    throw UnstableError("drift matrix is not Hurwitz (max Re eig = " +
                            std::to_string(stab.max_real_eig) + "); no steady state",
                        stab.max_real_eig);
  }

  // Work with M/s and D/s; V is unchanged by the common scaling.
  const double s = std::max(M.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const Mat8 Ms = M / s;
  const Mat8 Ds = D / s;

  constexpr int n = 8;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n * n, n * n);
  // vec(M V) = (I (x) M) vec V ; vec(V M^T) = (M (x) I) vec V  (column-major vec)
  for (int j = 0; j < n; ++j) {
    K.block(j * n, j * n, n, n) += Ms;
    for (int i = 0; i < n; ++i) {
      K.block(i * n, j * n, n, n).diagonal().array() += Ms(i, j);
    }
  }
  Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(Ds.data(), n * n);

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(K);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-15)) {
    throw NumericalError("Lyapunov system is numerically singular (rcond " + std::to_string(rcond) + ")",
                         rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity());
  }
  Eigen::VectorXd x = lu.solve(rhs);
  for (int step = 0; step < 2; ++step) {
    const Eigen::VectorXd r = rhs - K * x;
    if (r.norm() <= 1e-15 * rhs.norm()) break;
    x += lu.solve(r);
  }

  CovarianceMatrix cm;
  cm.V = Eigen::Map<const Mat8>(x.data());
  cm.V = 0.5 * (cm.V + cm.V.transpose()).eval();
  if (!cm.V.allFinite()) throw NumericalError("Lyapunov solution is not finite", 1.0 / rcond);
  return cm;
}

Mat8 symplectic_form() {
  Mat8 omega = Mat8::Zero();
  for (int k = 0; k < 8; k += 2) {
    omega(k, k + 1) = 1.0;
    omega(k + 1, k) = -1.0;
  }
  return omega;
}

double uncertainty_min_eigenvalue(const Mat8& V) {
  using Mat8c = Eigen::Matrix<Complex, 8, 8>;
  const Mat8c H = V.cast<Complex>() + Complex(0.0, 0.5) * symplectic_form().cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Mat8c> solver(H, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace cmm
