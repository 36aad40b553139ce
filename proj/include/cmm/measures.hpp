#pragma once

#include <array>

#include "cmm/lyapunov.hpp"
#include "cmm/types.hpp"

namespace cmm {

/// Two-mode reduction of the full covariance matrix, ordering (q_u, p_u, q_v, p_v).
struct BipartiteCM {
  Mat4 V4;
  Mode u;
  Mode v;

  Mat2 A() const { return V4.topLeftCorner<2, 2>(); }
  Mat2 B() const { return V4.bottomRightCorner<2, 2>(); }
  Mat2 C() const { return V4.topRightCorner<2, 2>(); }
};

BipartiteCM reduce_cm(const CovarianceMatrix& cm, Mode u, Mode v);
BipartiteCM reduce_cm(const Mat8& V, Mode u, Mode v);

struct Negativity {
  double E_N = 0;
  double nu_minus = 0;  // smaller symplectic eigenvalue of the partial transpose
};

/// Closed-form logarithmic negativity (natural log). Partial transposition
/// flips the momentum of u. Throws PhysicalityError if the symplectic
/// spectrum is complex beyond round-off.
Negativity log_negativity(const BipartiteCM& bcm);

/// Both symplectic eigenvalues of a 4x4 CM as sorted |eig(i Omega V)|, computed
/// with a general eigensolver. Cross-check for the closed form.
std::array<double, 2> symplectic_eigenvalues_generic(const Mat4& V4);

/// Partial transpose of V4 with respect to mode u (sign flip of p_u).
Mat4 partial_transpose(const Mat4& V4);

/// Rényi-2 Gaussian steerability. u_to_v = max(0, R(2A) - R(2V4)) and
/// v_to_u = max(0, R(2B) - R(2V4)) with R(W) = ln det W / 2.
struct Steering {
  double u_to_v = 0;
  double v_to_u = 0;
};

Steering steering(const BipartiteCM& bcm);

enum class SteeringClass { no_way, one_way, two_way };

inline constexpr double kSteeringThreshold = 1e-10;

SteeringClass classify_steering(double s_uv, double s_vu);
std::string_view steering_class_name(SteeringClass c);

/// Everything reported for one bipartition.
struct PairReport {
  Bipartition pair;
  double E_N = 0;
  double nu_minus = 0;
  double S_u_to_v = 0;
  double S_v_to_u = 0;
  SteeringClass steering_class = SteeringClass::no_way;
};

PairReport analyze_pair(const Mat8& V, const Bipartition& pair);

}  // namespace cmm
