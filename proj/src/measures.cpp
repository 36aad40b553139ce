#include "cmm/measures.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "cmm/errors.hpp"

namespace cmm {

namespace {

double renyi2(double det_w) { return 0.5 * std::log(det_w); }

Mat4 symplectic_form4() {
  Mat4 omega = Mat4::Zero();
  omega(0, 1) = omega(2, 3) = 1.0;
  omega(1, 0) = omega(3, 2) = -1.0;
  return omega;
}

}  // namespace

BipartiteCM reduce_cm(const Mat8& V, Mode u, Mode v) {
  if (u == v) throw DomainError("bipartition needs two distinct modes");
  const int iu = mode_offset(u);
  const int iv = mode_offset(v);
  const std::array<int, 4> idx = {iu, iu + 1, iv, iv + 1};
  BipartiteCM bcm{Mat4::Zero(), u, v};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) bcm.V4(r, c) = V(idx[r], idx[c]);
  return bcm;
}

BipartiteCM reduce_cm(const CovarianceMatrix& cm, Mode u, Mode v) { return reduce_cm(cm.V, u, v); }

Mat4 partial_transpose(const Mat4& V4) {
  const Eigen::Vector4d flip(1.0, -1.0, 1.0, 1.0);
  return flip.asDiagonal() * V4 * flip.asDiagonal();
}

std::array<double, 2> symplectic_eigenvalues_generic(const Mat4& V4) {
  // eig(Omega V) = +-i nu, so |eig(i Omega V)| = |eig(Omega V)|.
  Eigen::EigenSolver<Mat4> solver(symplectic_form4() * V4, false);
  if (solver.info() != Eigen::Success) throw NumericalError("symplectic eigenvalue iteration failed");
  std::array<double, 4> mags{};
  for (int i = 0; i < 4; ++i) mags[i] = std::abs(solver.eigenvalues()(i));
  std::sort(mags.begin(), mags.end());
  return {0.5 * (mags[0] + mags[1]), 0.5 * (mags[2] + mags[3])};
}

Negativity log_negativity(const BipartiteCM& bcm) {
  const double det_a = bcm.A().determinant();
  const double det_b = bcm.B().determinant();
  const double det_c = bcm.C().determinant();
  const double det_v = bcm.V4.determinant();
  const double sigma = det_a + det_b - 2.0 * det_c;
  double disc = sigma * sigma - 4.0 * det_v;
  if (disc < 0.0) {
    if (disc < -1e-10 * std::max(1.0, sigma * sigma)) {
      throw PhysicalityError("partially transposed CM has a complex symplectic spectrum");
    }
    disc = 0.0;
  }
  const double nu_sq = 0.5 * (sigma - std::sqrt(disc));
  if (nu_sq < 0.0) throw PhysicalityError("negative squared symplectic eigenvalue");

  Negativity out;
  out.nu_minus = std::sqrt(nu_sq);
  out.E_N = std::max(0.0, -std::log(2.0 * out.nu_minus));
#ifndef NDEBUG
  const double generic = symplectic_eigenvalues_generic(partial_transpose(bcm.V4))[0];
  if (std::abs(generic - out.nu_minus) > 1e-7 * std::max(1.0, std::sqrt(std::abs(sigma)))) {
    throw NumericalError("closed-form and generic symplectic eigenvalues disagree");
  }
#endif
  return out;
}

Steering steering(const BipartiteCM& bcm) {
  const double det_v = (2.0 * bcm.V4).determinant();
  if (!(det_v > 0.0)) throw PhysicalityError("two-mode CM has non-positive determinant");
  const double det_a = (2.0 * bcm.A()).determinant();
  const double det_b = (2.0 * bcm.B()).determinant();
  if (!(det_a > 0.0) || !(det_b > 0.0)) throw PhysicalityError("reduced CM has non-positive determinant");
  Steering s;
  s.u_to_v = std::max(0.0, renyi2(det_a) - renyi2(det_v));
  s.v_to_u = std::max(0.0, renyi2(det_b) - renyi2(det_v));
  return s;
}

SteeringClass classify_steering(double s_uv, double s_vu) {
  const bool a = s_uv > kSteeringThreshold;
  const bool b = s_vu > kSteeringThreshold;
  if (a && b) return SteeringClass::two_way;
  if (a || b) return SteeringClass::one_way;
  return SteeringClass::no_way;
}

std::string_view steering_class_name(SteeringClass c) {
  switch (c) {
    case SteeringClass::no_way: return "no-way";
    case SteeringClass::one_way: return "one-way";
    case SteeringClass::two_way: return "two-way";
  }
  return "?";
}

PairReport analyze_pair(const Mat8& V, const Bipartition& pair) {
  const BipartiteCM bcm = reduce_cm(V, pair.u, pair.v);
  const Negativity neg = log_negativity(bcm);
  const Steering st = steering(bcm);
  PairReport r;
  r.pair = pair;
  r.E_N = neg.E_N;
  r.nu_minus = neg.nu_minus;
  r.S_u_to_v = st.u_to_v;
  r.S_v_to_u = st.v_to_u;
  r.steering_class = classify_steering(st.u_to_v, st.v_to_u);
  return r;
}

}  // namespace cmm
