#pragma once

#include <random>

#include "cmm/model.hpp"
#include "cmm/steady_state.hpp"
#include "cmm/types.hpp"

namespace cmm {

using Rng = std::mt19937_64;

/// Gaussian matrix shifted so that max Re eig = -margin, margin in [0.1, 1).
Mat8 random_stable_drift(Rng& rng);

/// Diagonal with non-negative entries, at least one strictly positive.
Mat8 random_diffusion(Rng& rng);

/// Random symplectic 4x4 from local rotations/squeezers, a beam splitter and
/// a two-mode squeezer, ordering (q1, p1, q2, p2).
Mat4 random_symplectic4(Rng& rng);

/// S diag(n1, n1, n2, n2) S^T with n_i >= 1/2.
Mat4 random_physical_cm4(Rng& rng);

/// 2x2 rotation by angle theta, acting on (q, p).
Mat2 rotation2(double theta);

/// Operating point with random positive rates, couplings, detunings and phase,
/// in units where omega_b = 1.
SystemParams random_system_params(Rng& rng);

/// Steady state with a random complex m_s and effective detuning, for drift tests.
SteadyState random_steady_state(Rng& rng);

}  // namespace cmm
