#pragma once

#include "cmm/errors.hpp"
#include "cmm/model.hpp"
#include "cmm/types.hpp"

namespace cmm {

/// Semiclassical fixed point of the driven system.
struct SteadyState {
  Complex m_s{};
  Complex c1_s{};
  Complex c2_s{};
  double q_s = 0;          // -(G_mb/omega_b)|m_s|^2
  double p_s = 0;          // always exactly 0
  double delta_m_eff = 0;  // delta_m0 + G_mb q_s
  double delta_m0 = 0;     // bare detuning consistent with delta_m_eff
  int iterations = 0;
  double residual = 0;     // last |update| / omega_b
};

struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, SteadyState last) : Error(what), last(last) {}
  SteadyState last;
};

struct SteadyStateOptions {
  double tol = 1e-12;  // on |delta_m^(k+1) - delta_m^(k)| / omega_b
  int max_iter = 500;
};

/// Magnon amplitude at a given effective detuning (eliminating both cavities).
Complex magnon_amplitude(const SystemParams& params, double delta_m);

/// Cavity amplitudes (c1_s, c2_s) given m_s: exact solution of the 2x2
/// linear cavity subsystem.
std::pair<Complex, Complex> cavity_amplitudes(const SystemParams& params, Complex m_s);

/// Solves the self-consistent fixed point. With `delta_m_pinned` set the
/// effective detuning is taken as given and no iteration is needed; otherwise
/// Picard iteration on delta_m starting from delta_m0, switching to 0.5
/// damping once successive updates alternate in sign without shrinking.
SteadyState solve_steady_state(const SystemParams& params, const SteadyStateOptions& options = {});

/// Large-detuning form of the magnon amplitude (kappas dropped from the
/// cavity and magnon denominators). Uses the pinned effective detuning if
/// present, delta_m0 otherwise. Throws SingularityError at an exact pole.
Complex simplified_magnon_amplitude(const SystemParams& params);

}  // namespace cmm
