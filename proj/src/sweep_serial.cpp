#include "cmm/sweep.hpp"
#include "sweep_detail.hpp"

namespace cmm {

SweepResult run_sweep_serial(const SweepSpec& spec) {
  SweepResult r = detail::prepare_sweep(spec);
  for (std::size_t k = 0; k < r.points.size(); ++k) {
    r.points[k] = detail::evaluate_row(r.spec, r.x1[k], r.x2[k]);
  }
  return r;
}

}  // namespace cmm
