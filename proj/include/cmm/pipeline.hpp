#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmm/dynamics.hpp"
#include "cmm/lyapunov.hpp"
#include "cmm/measures.hpp"
#include "cmm/model.hpp"
#include "cmm/steady_state.hpp"

namespace cmm {

enum class PointStatus { ok, unstable, no_convergence, numerical_error, unphysical, invalid };

std::string_view point_status_name(PointStatus s);

/// Full chain for one operating point: steady state, drift/diffusion,
/// stability gate, covariance, measures. Failures are recorded, never thrown.
struct PointResult {
  PointStatus status = PointStatus::invalid;
  std::string message;
  bool has_steady_state = false;
  bool has_stability = false;
  SteadyState steady_state;
  StabilityReport stability;
  double lyapunov_residual = 0;
  std::vector<PairReport> pairs;  // empty unless status == ok

  bool ok() const { return status == PointStatus::ok; }
};

struct PipelineOptions {
  SteadyStateOptions steady_state;
  double physicality_tol = 1e-10;
  PhysicalConstants constants;
};

/// c2-c1, c2-m, c2-b.
std::vector<Bipartition> default_pairs();

PointResult evaluate_point(const SystemParams& params, const std::vector<Bipartition>& pairs,
                           const PipelineOptions& options = {});

/// Steady state, matrices and (if stable) covariance at one point. Throws on
/// any failure; meant for the single-point CLI commands.
struct PointDetail {
  SteadyState steady_state;
  DriftDiffusion dd;
  StabilityReport stability;
  std::optional<CovarianceMatrix> cm;
};

PointDetail evaluate_detail(const SystemParams& params, const PipelineOptions& options = {});

}  // namespace cmm
