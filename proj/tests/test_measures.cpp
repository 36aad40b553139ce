#include "doctest.h"

#include <cmath>

#include "cmm/dynamics.hpp"
#include "cmm/errors.hpp"
#include "cmm/measures.hpp"
#include "cmm/pipeline.hpp"
#include "cmm/presets.hpp"
#include "cmm/random_instances.hpp"
#include "oracles.hpp"

using namespace cmm;

namespace {

BipartiteCM tmsv(double r) {
  BipartiteCM b{Mat4::Zero(), Mode::c2, Mode::m};
  b.V4.topLeftCorner<2, 2>() = b.V4.bottomRightCorner<2, 2>() = 0.5 * std::cosh(2 * r) * Mat2::Identity();
  b.V4(0, 2) = b.V4(2, 0) = 0.5 * std::sinh(2 * r);
  b.V4(1, 3) = b.V4(3, 1) = -0.5 * std::sinh(2 * r);
  return b;
}

Mat4 local_rotation(double a, double b) {
  Mat4 R = Mat4::Zero();
  R.topLeftCorner<2, 2>() = rotation2(a);
  R.bottomRightCorner<2, 2>() = rotation2(b);
  return R;
}

}  // namespace

TEST_CASE("reduction") {
  const Mat8 V = 0.5 * Mat8::Identity();
  for (Mode u : kAllModes)
    for (Mode v : kAllModes) {
      if (u == v) {
        CHECK_THROWS_AS(reduce_cm(V, u, v), DomainError);
        continue;
      }
      CHECK(reduce_cm(V, u, v).V4 == 0.5 * Mat4::Identity());
    }
  Mat8 W;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) W(i, j) = 10 * std::min(i, j) + std::max(i, j);
  const BipartiteCM a = reduce_cm(W, Mode::c2, Mode::m);
  const BipartiteCM b = reduce_cm(W, Mode::m, Mode::c2);
  CHECK(a.A() == b.B());
  CHECK(a.B() == b.A());
  CHECK(a.C() == Mat2(b.C().transpose()));
  CHECK(a.V4(0, 0) == W(6, 6));
  CHECK(a.V4(1, 2) == W(7, 2));
  CHECK_THROWS_AS(parse_mode("c3"), DomainError);
}

TEST_CASE("two-mode squeezed vacuum against 50-digit closed forms") {
  for (const char* rs : {"0.1", "0.5", "1.0"}) {
    const double r = std::stod(rs);
    const oracle::Real R(rs);
    const BipartiteCM b = tmsv(r);
    const Negativity n = log_negativity(b);
    CHECK(std::abs(n.E_N - oracle::tmsv_log_negativity(R).convert_to<double>()) <= 1e-9);
    CHECK(std::abs(n.E_N - 2 * r) <= 1e-9);
    CHECK(n.nu_minus == doctest::Approx(std::exp(-2 * r) / 2).epsilon(1e-10));
    const Steering s = steering(b);
    const double ref = oracle::tmsv_steering(R).convert_to<double>();
    CHECK(std::abs(s.u_to_v - ref) <= 1e-9);
    CHECK(std::abs(s.v_to_u - ref) <= 1e-9);
    CHECK(classify_steering(s.u_to_v, s.v_to_u) == SteeringClass::two_way);
  }
}

TEST_CASE("vacuum and thermal products are separable and unsteerable") {
  for (double n : {0.0, 1.0, 10.0}) {
    BipartiteCM b{Mat4::Zero(), Mode::b, Mode::c1};
    b.V4.topLeftCorner<2, 2>() = (n + 0.5) * Mat2::Identity();
    b.V4.bottomRightCorner<2, 2>() = (2 * n + 0.5) * Mat2::Identity();
    const Negativity neg = log_negativity(b);
    CHECK(neg.E_N == 0.0);
    CHECK(neg.nu_minus >= 0.5 - 1e-15);
    const Steering s = steering(b);
    CHECK(s.u_to_v == 0.0);
    CHECK(s.v_to_u == 0.0);
  }
  const Negativity vac = log_negativity({0.5 * Mat4::Identity(), Mode::b, Mode::m});
  CHECK(vac.nu_minus == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(vac.E_N == 0.0);
}

TEST_CASE("closed form against the generic symplectic spectrum") {
  Rng rng(29);
  for (int i = 0; i < 1000; ++i) {
    const BipartiteCM b{random_physical_cm4(rng), Mode::c2, Mode::b};
    const Negativity n = log_negativity(b);
    const double generic = symplectic_eigenvalues_generic(partial_transpose(b.V4))[0];
    REQUIRE(std::abs(n.nu_minus - generic) <= 1e-9);
    // PPT consistency, both ways
    REQUIRE((n.E_N > 0) == (n.nu_minus < 0.5));
    // flipping v instead of u gives the same spectrum
    const Eigen::Vector4d flip_v(1.0, 1.0, 1.0, -1.0);
    const Mat4 Vt = flip_v.asDiagonal() * b.V4 * flip_v.asDiagonal();
    REQUIRE(std::abs(symplectic_eigenvalues_generic(Vt)[0] - generic) <= 1e-9);
    // the untransposed CM is physical
    REQUIRE(symplectic_eigenvalues_generic(b.V4)[0] >= 0.5 - 1e-9);
  }
}

TEST_CASE("label swap and local rotations leave the measures unchanged") {
  Rng rng(31);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int i = 0; i < 200; ++i) {
    const BipartiteCM b{random_physical_cm4(rng), Mode::m, Mode::c2};
    const Negativity n = log_negativity(b);
    const Steering s = steering(b);

    Mat4 swapped;
    swapped << b.B(), b.C().transpose(), b.C(), b.A();
    const Negativity ns = log_negativity({swapped, Mode::c2, Mode::m});
    CHECK(ns.E_N == doctest::Approx(n.E_N).epsilon(1e-9));
    const Steering ss = steering({swapped, Mode::c2, Mode::m});
    CHECK(ss.u_to_v == doctest::Approx(s.v_to_u).epsilon(1e-9));

    const Mat4 R = local_rotation(angle(rng), angle(rng));
    const BipartiteCM rot{R * b.V4 * R.transpose(), Mode::m, Mode::c2};
    CHECK(std::abs(log_negativity(rot).E_N - n.E_N) <= 1e-9);
    const Steering sr = steering(rot);
    CHECK(std::abs(sr.u_to_v - s.u_to_v) <= 1e-9);
    CHECK(std::abs(sr.v_to_u - s.v_to_u) <= 1e-9);
  }
}

TEST_CASE("steering implies entanglement on random states") {
  Rng rng(37);
  int steerable = 0;
  for (int i = 0; i < 1000; ++i) {
    const BipartiteCM b{random_physical_cm4(rng), Mode::m, Mode::c2};
    const Steering s = steering(b);
    if (s.u_to_v > kSteeringThreshold || s.v_to_u > kSteeringThreshold) {
      ++steerable;
      REQUIRE(log_negativity(b).nu_minus < 0.5);
    }
  }
  CHECK(steerable > 50);
}

TEST_CASE("classification") {
  CHECK(classify_steering(0, 0) == SteeringClass::no_way);
  CHECK(classify_steering(0.2, 0) == SteeringClass::one_way);
  CHECK(classify_steering(0, 0.2) == SteeringClass::one_way);
  CHECK(classify_steering(0.1, 0.3) == SteeringClass::two_way);
  CHECK(classify_steering(5e-11, 0) == SteeringClass::no_way);
  CHECK(steering_class_name(SteeringClass::one_way) == "one-way");
}

TEST_CASE("unphysical input is rejected") {
  CHECK_THROWS_AS(steering({Mat4::Zero(), Mode::b, Mode::m}), PhysicalityError);
  Mat4 bad = 0.5 * Mat4::Identity();
  bad(0, 2) = bad(2, 0) = 3.0;  // indefinite
  CHECK_THROWS_AS(steering({bad, Mode::b, Mode::m}), PhysicalityError);
}

TEST_CASE("operating point correlations") {
  const SystemParams p = calibrated_params();
  const PointResult r = evaluate_point(p, default_pairs());
  REQUIRE(r.ok());
  const PairReport& c2m = r.pairs[1];
  CHECK(bipartition_label(c2m.pair) == "c2-m");
  CHECK(c2m.E_N > 0);
  const Mat8 V = [&] {
    const SteadyState ss = solve_steady_state(p);
    const DriftDiffusion dd = build_drift_diffusion(p, ss, bath_occupancy(p));
    return solve_lyapunov(dd.M, dd.D).V;
  }();
  CHECK_FALSE(reduce_cm(V, Mode::c2, Mode::m).C().isZero(1e-6));
}
