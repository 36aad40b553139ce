#pragma once

#include "cmm/sweep.hpp"

namespace cmm::detail {

// Coordinates filled in, points default-constructed.
SweepResult prepare_sweep(const SweepSpec& spec);

PointResult evaluate_row(const SweepSpec& spec, double x1, double x2);

}  // namespace cmm::detail
