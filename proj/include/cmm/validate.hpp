#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmm {

struct ValidateOptions {
  double tolerance_scale = 1.0;  // multiplies every pass threshold
  int draws = 200;               // random instances per randomized property
  std::uint64_t seed = 20240611;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  double worst = 0;      // worst observed error (or count of violations)
  double tolerance = 0;  // threshold it was compared against
  double seconds = 0;
};

/// Built-in property suite: Lyapunov residuals, two-mode squeezed and thermal
/// oracles, closed-form vs generic symplectic spectrum, drift derivation
/// equality and trace identity, preset stability.
std::vector<PropertyResult> run_validation(const ValidateOptions& options = {});

}  // namespace cmm
