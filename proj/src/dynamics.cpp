#include "cmm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cmm {

namespace {

constexpr Complex kI{0.0, 1.0};

// Internal check that the literal and derived drift layouts agree. Active in
// debug builds only.
void debug_check_drift(const Mat8& literal, const SystemParams& params, const SteadyState& ss) {
#ifndef NDEBUG
  const Mat8 derived = build_drift_derived(params, ss);
  const double scale = std::max(1.0, literal.cwiseAbs().maxCoeff());
  if ((literal - derived).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw NumericalError("drift matrix layout disagrees with its derivation");
  }
#else
  (void)literal;
  (void)params;
  (void)ss;
#endif
}

}  // namespace

Mat8 build_drift(const SystemParams& p, const SteadyState& ss) {
  const double g_alpha = p.G_mb * std::numbers::sqrt2 * ss.m_s.real();
  const double g_beta = p.G_mb * std::numbers::sqrt2 * ss.m_s.imag();
  const double mu = p.pfc_sin_term();
  const double nu = p.pfc_cos_term();
  const double wb = p.omega_b;
  const double dm = ss.delta_m_eff;
  const double km = p.kappa_m, k1 = p.kappa_1, k2 = p.kappa_2;
  const double d1 = p.delta_1, d2 = p.delta_2;
  const double G = p.Gamma;

  Mat8 M;
  // clang-format off
  M <<      0,       wb,    0,    0,    0,    0,    0,    0,
          -wb, -p.gamma_b, -g_alpha, -g_beta, 0, 0,   0,    0,
       g_beta,        0,  -km,   dm,    0,    G,    0,    0,
     -g_alpha,        0,  -dm,  -km,   -G,    0,    0,    0,
            0,        0,    0,    G,  -k1,   d1,   mu,   nu,
            0,        0,   -G,    0,  -d1,  -k1,  -nu,   mu,
            0,        0,    0,    0,  -mu,   nu,  -k2,   d2,
            0,        0,    0,    0,  -nu,  -mu,  -d2,  -k2;
  // clang-format on
  debug_check_drift(M, p, ss);
  return M;
}

Mat8 build_drift_derived(const SystemParams& p, const SteadyState& ss) {
  using Mat8c = Eigen::Matrix<Complex, 8, 8>;
  // Basis z = (dq, dp, dm, dm^+, dc1, dc1^+, dc2, dc2^+).
  enum { q = 0, pp = 1, m = 2, md = 3, a1 = 4, a1d = 5, a2 = 6, a2d = 7 };
  const Complex ms = ss.m_s;
  const Complex e_phi = std::polar(1.0, p.phi);

  Mat8c A = Mat8c::Zero();
  A(q, pp) = p.omega_b;

  A(pp, q) = -p.omega_b;
  A(pp, pp) = -p.gamma_b;
  A(pp, md) = -p.G_mb * ms;
  A(pp, m) = -p.G_mb * std::conj(ms);

  A(m, m) = -Complex(p.kappa_m, ss.delta_m_eff);
  A(m, a1) = -kI * p.Gamma;
  A(m, q) = -kI * p.G_mb * ms;

  A(a1, a1) = -Complex(p.kappa_1, p.delta_1);
  A(a1, m) = -kI * p.Gamma;
  A(a1, a2) = -kI * p.xi * e_phi;

  A(a2, a2) = -Complex(p.kappa_2, p.delta_2);
  A(a2, a1) = -kI * p.xi * std::conj(e_phi);

  // Hermitian-conjugate rows.
  for (int row : {md, a1d, a2d}) {
    for (int col = 0; col < 8; ++col) {
      const int src_col = col < 2 ? col : ((col % 2 == 0) ? col + 1 : col - 1);
      A(row, src_col) = std::conj(A(row - 1, col));
    }
  }

  // z = S F with F = (dq, dp, dx, dy, dX1, dY1, dX2, dY2):
  // da = (dx + i dy)/sqrt2, da^+ = (dx - i dy)/sqrt2.
  Mat8c S = Mat8c::Zero();
  S(0, 0) = 1.0;
  S(1, 1) = 1.0;
  const double r = 1.0 / std::numbers::sqrt2;
  for (int k = 2; k < 8; k += 2) {
    S(k, k) = r;
    S(k, k + 1) = kI * r;
    S(k + 1, k) = r;
    S(k + 1, k + 1) = -kI * r;
  }
  Mat8c S_inv = Mat8c::Zero();
  S_inv(0, 0) = 1.0;
  S_inv(1, 1) = 1.0;
  for (int k = 2; k < 8; k += 2) {
    S_inv(k, k) = r;
    S_inv(k, k + 1) = r;
    S_inv(k + 1, k) = -kI * r;
    S_inv(k + 1, k + 1) = kI * r;
  }
  const Mat8c M = S_inv * A * S;
  return M.real();
}

Eigen::Matrix<bool, 8, 8> drift_sparsity_pattern() {
  Eigen::Matrix<bool, 8, 8> mask;
  // clang-format off
  mask << 0,1,0,0,0,0,0,0,
          1,1,1,1,0,0,0,0,
          1,0,1,1,0,1,0,0,
          1,0,1,1,1,0,0,0,
          0,0,0,1,1,1,1,1,
          0,0,1,0,1,1,1,1,
          0,0,0,0,1,1,1,1,
          0,0,0,0,1,1,1,1;
  // clang-format on
  return mask;
}

Mat8 build_diffusion(const SystemParams& p, const BathOccupancy& occ) {
  Mat8 D = Mat8::Zero();
  D(1, 1) = p.gamma_b * (2.0 * occ.n_b + 1.0);
  D(2, 2) = D(3, 3) = p.kappa_m * (2.0 * occ.n_m + 1.0);
  D(4, 4) = D(5, 5) = p.kappa_1 * (2.0 * occ.n_1 + 1.0);
  D(6, 6) = D(7, 7) = p.kappa_2 * (2.0 * occ.n_2 + 1.0);
  return D;
}

DriftDiffusion build_drift_diffusion(const SystemParams& p, const SteadyState& ss,
                                     const BathOccupancy& occ) {
  DriftDiffusion dd;
  dd.M = build_drift(p, ss);
  dd.D = build_diffusion(p, occ);
  dd.alpha = std::numbers::sqrt2 * ss.m_s.real();
  dd.beta = std::numbers::sqrt2 * ss.m_s.imag();
  dd.mu = p.pfc_sin_term();
  dd.nu_pfc = p.pfc_cos_term();
  return dd;
}

}  // namespace cmm
