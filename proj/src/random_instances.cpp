#include "cmm/random_instances.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace cmm {

namespace {

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

}  // namespace

Mat8 random_stable_drift(Rng& rng) {
  std::normal_distribution<double> normal;
  Mat8 A;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) A(i, j) = normal(rng);
  const Eigen::EigenSolver<Mat8> es(A, false);
  const double max_re = es.eigenvalues().real().maxCoeff();
  const double margin = uniform(rng, 0.1, 1.0);
  return A - (max_re + margin) * Mat8::Identity();
}

Mat8 random_diffusion(Rng& rng) {
  Mat8 D = Mat8::Zero();
  for (int i = 0; i < 8; ++i) D(i, i) = rng() % 5 == 0 ? 0.0 : uniform(rng, 0.0, 3.0);
  D(0, 0) += uniform(rng, 0.1, 1.0);
  return D;
}

Mat2 rotation2(double theta) {
  Mat2 R;
  R << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return R;
}

Mat4 random_symplectic4(Rng& rng) {
  auto local = [&] {
    Mat4 L = Mat4::Zero();
    for (int k = 0; k < 4; k += 2) {
      const double r = uniform(rng, -1.0, 1.0);
      const Mat2 sq = Eigen::Vector2d(std::exp(-r), std::exp(r)).asDiagonal();
      L.block<2, 2>(k, k) = rotation2(uniform(rng, 0.0, 2 * std::numbers::pi)) * sq *
                            rotation2(uniform(rng, 0.0, 2 * std::numbers::pi));
    }
    return L;
  };
  const double t = uniform(rng, 0.0, std::numbers::pi);
  Mat4 bs = Mat4::Zero();
  bs.block<2, 2>(0, 0) = bs.block<2, 2>(2, 2) = std::cos(t) * Mat2::Identity();
  bs.block<2, 2>(0, 2) = std::sin(t) * Mat2::Identity();
  bs.block<2, 2>(2, 0) = -std::sin(t) * Mat2::Identity();

  const double r = uniform(rng, 0.0, 1.2);
  const Mat2 Z = Eigen::Vector2d(1.0, -1.0).asDiagonal();
  Mat4 tms = Mat4::Zero();
  tms.block<2, 2>(0, 0) = tms.block<2, 2>(2, 2) = std::cosh(r) * Mat2::Identity();
  tms.block<2, 2>(0, 2) = tms.block<2, 2>(2, 0) = std::sinh(r) * Z;

  return local() * bs * tms * local();
}

Mat4 random_physical_cm4(Rng& rng) {
  const Mat4 S = random_symplectic4(rng);
  const double n1 = 0.5 + std::exp(uniform(rng, -6.0, 1.5)) * (rng() % 4 == 0 ? 0.0 : 1.0);
  const double n2 = 0.5 + std::exp(uniform(rng, -6.0, 1.5));
  const Eigen::Vector4d w(n1, n1, n2, n2);
  Mat4 V = S * w.asDiagonal() * S.transpose();
  return 0.5 * (V + V.transpose());
}

SystemParams random_system_params(Rng& rng) {
  SystemParams p;
  p.omega_b = 1.0;
  p.omega_c1 = p.omega_c2 = p.omega_m = 1000.0;
  p.delta_1 = uniform(rng, -3.0, 3.0);
  p.delta_2 = uniform(rng, -3.0, 3.0);
  p.delta_m0 = uniform(rng, -3.0, 3.0);
  p.kappa_1 = uniform(rng, 0.01, 0.5);
  p.kappa_2 = uniform(rng, 0.01, 0.5);
  p.kappa_m = uniform(rng, 0.01, 0.5);
  p.gamma_b = uniform(rng, 1e-6, 1e-2);
  p.Gamma = uniform(rng, 0.0, 1.0);
  p.G_mb = uniform(rng, 0.0, 1e-3);
  p.xi = uniform(rng, 0.0, 1.0);
  p.phi = uniform(rng, 0.0, 2 * std::numbers::pi);
  p.eps_m = uniform(rng, 0.0, 100.0);
  p.eps_c = uniform(rng, 0.0, 100.0);
  p.T = uniform(rng, 0.0, 0.5);
  return p;
}

SteadyState random_steady_state(Rng& rng) {
  SteadyState ss;
  ss.m_s = Complex(uniform(rng, -500.0, 500.0), uniform(rng, -500.0, 500.0));
  ss.delta_m_eff = uniform(rng, -3.0, 3.0);
  ss.q_s = uniform(rng, -1.0, 0.0);
  return ss;
}

}  // namespace cmm
