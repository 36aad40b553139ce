#pragma once

#include <array>

#include "cmm/types.hpp"

namespace cmm {

/// Stationary covariance V_ij = <F_i F_j + F_j F_i>/2 in the fixed quadrature
/// order (see kQuadratureLabels).
struct CovarianceMatrix {
  Mat8 V;

  static constexpr const auto& labels() { return kQuadratureLabels; }
};

struct StabilityReport {
  double max_real_eig = 0;
  bool stable = false;
  /// |max_real_eig| within the reporting tolerance 1e-9 * scale.
  bool marginal = false;
  std::array<Complex, 8> eigenvalues{};
};

/// Eigenvalues of M and the Hurwitz decision (stable iff max Re < 0).
/// `scale` sets the marginal-reporting band, normally omega_b.
StabilityReport stability(const Mat8& M, double scale = 1.0);

/// Solves M V + V M^T = -D by the vectorised Kronecker-sum system.
/// Throws UnstableError if M is not Hurwitz and NumericalError when the
/// linear system is too ill-conditioned.
CovarianceMatrix solve_lyapunov(const Mat8& M, const Mat8& D);

/// ||M V + V M^T + D||_F / ||D||_F.
double lyapunov_residual(const Mat8& M, const Mat8& D, const Mat8& V);

/// Block-diagonal symplectic form, four copies of [[0, 1], [-1, 0]].
Mat8 symplectic_form();

/// Smallest eigenvalue of the Hermitian matrix V + (i/2) Omega; >= 0 for a
/// physical state.
double uncertainty_min_eigenvalue(const Mat8& V);

}  // namespace cmm
