#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cmm/model.hpp"
#include "cmm/sweep.hpp"

namespace cmm {

struct Tolerances {
  double steady_state_tol = 1e-12;
  int max_iter = 500;
  double physicality_tol = 1e-10;
  double validate_scale = 1.0;  // multiplies every tolerance of the validate suite
};

/// Everything a CLI run needs, after preset resolution.
struct RunConfig {
  SystemParams system;
  MaterialParams material;
  std::optional<std::string> preset;
  std::optional<Axis> axis1;
  std::optional<Axis> axis2;
  std::vector<Bipartition> pairs = default_pairs();
  std::optional<std::string> output;
  int workers = 0;
  Tolerances tolerances;
  Metadata metadata;

  PipelineOptions pipeline_options() const;
  /// Throws ConfigError when no sweep axis is defined.
  SweepSpec sweep_spec() const;
};

/// Parses a JSON document. Keys are snake_case SI; any angular key may be
/// given as `<key>_over_2pi_Hz` instead. Unknown keys, a preset combined with
/// explicit axes, or a non-preset config without G_mb raise ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

/// Config for a named preset with no overrides.
RunConfig preset_config(const std::string& name);

/// Effective config as JSON (explicit axes, no preset reference). Loading it
/// back reproduces the same run.
std::string dump_config(const RunConfig& config);

}  // namespace cmm
