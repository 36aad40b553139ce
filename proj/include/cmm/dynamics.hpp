#pragma once

#include "cmm/model.hpp"
#include "cmm/steady_state.hpp"
#include "cmm/types.hpp"

namespace cmm {

/// Linearised fluctuation dynamics dF/dt = M F + N in the fixed quadrature
/// order (q, p, x, y, X1, Y1, X2, Y2), with vacuum quadrature variance 1/2.
struct DriftDiffusion {
  Mat8 M;
  Mat8 D;
  double alpha = 0;   // sqrt(2) Re m_s
  double beta = 0;    // sqrt(2) Im m_s
  double mu = 0;      // xi sin(phi)
  double nu_pfc = 0;  // xi cos(phi)
};

/// Drift matrix written out entry by entry.
Mat8 build_drift(const SystemParams& params, const SteadyState& ss);

/// Same matrix obtained independently: the complex fluctuation equations for
/// (dq, dp, dm, dm^+, dc1, dc1^+, dc2, dc2^+) are assembled and rotated into
/// quadratures. Used as a cross-check of build_drift.
Mat8 build_drift_derived(const SystemParams& params, const SteadyState& ss);

/// Boolean mask of the entries of build_drift that are not identically zero.
Eigen::Matrix<bool, 8, 8> drift_sparsity_pattern();

/// diag[0, gamma_b T_b, kappa_m T_m, kappa_m T_m, kappa_1 T_1, kappa_1 T_1,
///      kappa_2 T_2, kappa_2 T_2] with T_s = 2 n_s + 1.
Mat8 build_diffusion(const SystemParams& params, const BathOccupancy& occ);

DriftDiffusion build_drift_diffusion(const SystemParams& params, const SteadyState& ss,
                                     const BathOccupancy& occ);

}  // namespace cmm
