#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmm/model.hpp"
#include "cmm/sweep.hpp"

namespace cmm {

/// YIG sphere and drive as listed in the experimental parameter set, with
/// Faraday rotation and refractive index of bulk YIG.
MaterialParams default_material();

/// Experimental parameter set taken literally (gamma_b = 2 pi x 100 MHz),
/// operating point Delta_1 = Delta_2 = -omega_b, Delta_m0 = omega_b, no
/// converter. G_mb is left at 0: it has no published value.
SystemParams listed_params();

/// Figure base point: gamma_b = 2 pi x 100 Hz, calibrated kappa_m and G_mb,
/// effective Delta_m held at omega_b, xi = 0.3 omega_b, phi = 0, T = 10 mK.
SystemParams calibrated_params();

struct Preset {
  std::string name;
  std::string description;
  SystemParams base;
  Axis axis1;
  std::optional<Axis> axis2;
  std::vector<Bipartition> pairs;
  Metadata notes;
};

const std::vector<std::string>& preset_names();

/// Throws ConfigError for an unknown name.
Preset make_preset(const std::string& name);

}  // namespace cmm
