#include "cmm/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "cmm/dynamics.hpp"
#include "cmm/lyapunov.hpp"
#include "cmm/measures.hpp"
#include "cmm/pipeline.hpp"
#include "cmm/presets.hpp"
#include "cmm/random_instances.hpp"

namespace cmm {

namespace {

BipartiteCM tmsv(double r) {
  BipartiteCM b{Mat4::Zero(), Mode::c2, Mode::m};
  const Mat2 Z = Eigen::Vector2d(1.0, -1.0).asDiagonal();
  b.V4.topLeftCorner<2, 2>() = b.V4.bottomRightCorner<2, 2>() = 0.5 * std::cosh(2 * r) * Mat2::Identity();
  b.V4.topRightCorner<2, 2>() = b.V4.bottomLeftCorner<2, 2>() = 0.5 * std::sinh(2 * r) * Z;
  return b;
}

struct Property {
  std::string name;
  double tolerance;
  std::function<double(Rng&)> worst_error;  // compared as worst <= tolerance
};

}  // namespace

std::vector<PropertyResult> run_validation(const ValidateOptions& opt) {
  const int n = std::max(1, opt.draws);
  std::vector<Property> props;

  props.push_back({"lyapunov_identity", 1e-12, [](Rng&) {
                     const Mat8 V = solve_lyapunov(-0.5 * Mat8::Identity(), Mat8::Identity()).V;
                     return (V - Mat8::Identity()).cwiseAbs().maxCoeff();
                   }});
  props.push_back({"lyapunov_residual_random", 1e-10, [n](Rng& rng) {
                     double worst = 0;
                     for (int i = 0; i < n; ++i) {
                       const Mat8 M = random_stable_drift(rng);
                       const Mat8 D = random_diffusion(rng);
                       worst = std::max(worst, lyapunov_residual(M, D, solve_lyapunov(M, D).V));
                     }
                     return worst;
                   }});
  props.push_back({"tmsv_log_negativity", 1e-9, [](Rng&) {
                     double worst = 0;
                     for (double r : {0.1, 0.5, 1.0}) worst = std::max(worst, std::abs(log_negativity(tmsv(r)).E_N - 2 * r));
                     return worst;
                   }});
  props.push_back({"tmsv_steering", 1e-9, [](Rng&) {
                     double worst = 0;
                     for (double r : {0.1, 0.5, 1.0}) {
                       const Steering s = steering(tmsv(r));
                       const double expect = std::log(std::cosh(2 * r));
                       worst = std::max({worst, std::abs(s.u_to_v - expect), std::abs(s.v_to_u - expect)});
                     }
                     return worst;
                   }});
  props.push_back({"thermal_product_separable", 1e-12, [](Rng&) {
                     double worst = 0;
                     for (double nth : {0.0, 1.0, 10.0}) {
                       const BipartiteCM b{(nth + 0.5) * Mat4::Identity(), Mode::b, Mode::m};
                       const Steering s = steering(b);
                       worst = std::max({worst, log_negativity(b).E_N, s.u_to_v, s.v_to_u});
                     }
                     return worst;
                   }});
  props.push_back({"symplectic_closed_vs_generic", 1e-9, [n](Rng& rng) {
                     double worst = 0;
                     for (int i = 0; i < n; ++i) {
                       const BipartiteCM b{random_physical_cm4(rng), Mode::c2, Mode::m};
                       const double closed = log_negativity(b).nu_minus;
                       const double generic = symplectic_eigenvalues_generic(partial_transpose(b.V4))[0];
                       worst = std::max(worst, std::abs(closed - generic));
                     }
                     return worst;
                   }});
  props.push_back({"drift_derivation_equality", 1e-12, [n](Rng& rng) {
                     double worst = 0;
                     for (int i = 0; i < n; ++i) {
                       const SystemParams p = random_system_params(rng);
                       const SteadyState ss = random_steady_state(rng);
                       const Mat8 a = build_drift(p, ss);
                       const Mat8 b = build_drift_derived(p, ss);
                       worst = std::max(worst, (a - b).cwiseAbs().maxCoeff() / std::max(1.0, a.cwiseAbs().maxCoeff()));
                     }
                     return worst;
                   }});
  props.push_back({"drift_trace_identity", 1e-12, [n](Rng& rng) {
                     double worst = 0;
                     for (int i = 0; i < n; ++i) {
                       const SystemParams p = random_system_params(rng);
                       const double tr = build_drift(p, random_steady_state(rng)).trace();
                       const double expect = -p.gamma_b - 2 * (p.kappa_m + p.kappa_1 + p.kappa_2);
                       worst = std::max(worst, std::abs(tr - expect) / std::abs(expect));
                     }
                     return worst;
                   }});
  props.push_back({"presets_stable_at_base", 0.0, [](Rng&) {
                     double unstable = 0;
                     for (const std::string& name : preset_names()) {
                       const PointResult r = evaluate_point(make_preset(name).base, default_pairs());
                       if (!r.ok()) unstable += 1;
                     }
                     return unstable;
                   }});
  props.push_back({"steering_implies_entanglement_at_presets", 0.0, [](Rng&) {
                     double violations = 0;
                     for (const std::string& name : preset_names()) {
                       const Preset p = make_preset(name);
                       for (const PairReport& r : evaluate_point(p.base, default_pairs()).pairs) {
                         const bool steer = r.S_u_to_v > kSteeringThreshold || r.S_v_to_u > kSteeringThreshold;
                         if (steer && !(r.nu_minus < 0.5)) violations += 1;
                       }
                     }
                     return violations;
                   }});

  std::vector<PropertyResult> out;
  Rng rng(opt.seed);
  for (const Property& prop : props) {
    PropertyResult r;
    r.name = prop.name;
    r.tolerance = prop.tolerance * opt.tolerance_scale;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.worst = prop.worst_error(rng);
      r.passed = r.worst <= r.tolerance;
    } catch (const std::exception&) {
      r.worst = INFINITY;
      r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  }
  return out;
}

}  // namespace cmm
