#include "cmm/pipeline.hpp"

#include "cmm/errors.hpp"

namespace cmm {

std::string_view point_status_name(PointStatus s) {
  switch (s) {
    case PointStatus::ok: return "ok";
    case PointStatus::unstable: return "unstable";
    case PointStatus::no_convergence: return "no_convergence";
    case PointStatus::numerical_error: return "numerical_error";
    case PointStatus::unphysical: return "unphysical";
    case PointStatus::invalid: return "invalid";
  }
  return "?";
}

std::vector<Bipartition> default_pairs() {
  return {{Mode::c2, Mode::c1}, {Mode::c2, Mode::m}, {Mode::c2, Mode::b}};
}

PointResult evaluate_point(const SystemParams& params, const std::vector<Bipartition>& pairs,
                           const PipelineOptions& options) {
  PointResult out;
  try {
    params.validate();
    out.steady_state = solve_steady_state(params, options.steady_state);
    out.has_steady_state = true;
    const DriftDiffusion dd =
        build_drift_diffusion(params, out.steady_state, bath_occupancy(params, options.constants));
    out.stability = stability(dd.M, params.omega_b);
    out.has_stability = true;
    if (!out.stability.stable) {
      out.status = PointStatus::unstable;
      return out;
    }
    const CovarianceMatrix cm = solve_lyapunov(dd.M, dd.D);
    out.lyapunov_residual = lyapunov_residual(dd.M, dd.D, cm.V);
    if (uncertainty_min_eigenvalue(cm.V) < -options.physicality_tol) {
      out.status = PointStatus::unphysical;
      out.message = "covariance violates the uncertainty relation";
      return out;
    }
    out.pairs.reserve(pairs.size());
    for (const Bipartition& pair : pairs) out.pairs.push_back(analyze_pair(cm.V, pair));
    out.status = PointStatus::ok;
  } catch (const ConvergenceError& e) {
    out.status = PointStatus::no_convergence;
    out.steady_state = e.last;
    out.message = e.what();
  } catch (const UnstableError& e) {
    out.status = PointStatus::unstable;
    out.message = e.what();
  } catch (const PhysicalityError& e) {
    out.status = PointStatus::unphysical;
    out.message = e.what();
    out.pairs.clear();
  } catch (const NumericalError& e) {
    out.status = PointStatus::numerical_error;
    out.message = e.what();
    out.pairs.clear();
  } catch (const Error& e) {
    out.status = PointStatus::invalid;
    out.message = e.what();
    out.pairs.clear();
  }
  return out;
}

PointDetail evaluate_detail(const SystemParams& params, const PipelineOptions& options) {
  params.validate();
  PointDetail d;
  d.steady_state = solve_steady_state(params, options.steady_state);
  d.dd = build_drift_diffusion(params, d.steady_state, bath_occupancy(params, options.constants));
  d.stability = stability(d.dd.M, params.omega_b);
  if (d.stability.stable) d.cm = solve_lyapunov(d.dd.M, d.dd.D);
  return d;
}

}  // namespace cmm
