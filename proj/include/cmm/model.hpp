#pragma once

#include <numbers>
#include <optional>

namespace cmm {

/// CODATA 2018 exact/recommended values.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;  // J s
  double k_B = 1.380649e-23;      // J/K
  double c_light = 299792458.0;   // m/s

  void validate() const;
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Bose-Einstein occupancy 1/(exp(hbar*omega/(k_B*T)) - 1); exactly 0 at T = 0.
double thermal_occupancy(double omega, double temperature,
                         const PhysicalConstants& constants = {});

/// Cavity drive rate sqrt(2*kappa*power/(hbar*omega_c)) in rad/s.
double cavity_drive_amplitude(double power, double kappa, double omega_c,
                              const PhysicalConstants& constants = {});

/// YIG sphere and drive properties.
struct MaterialParams {
  double rho_s;     // spin density, 1/m^3
  double r_sphere;  // m
  double n_r;       // refractive index
  double verdet;    // Faraday rotation per unit length at saturation, rad/m
  double gamma_G;   // gyromagnetic ratio, rad/(s T)
  double H_d;       // drive field amplitude, T
  double power;     // cavity laser power, W

  double volume() const;       // (4/3) pi r^3
  double spin_number() const;  // rho_s * volume
  void validate() const;
};

/// Rabi frequency (5/4) gamma_G sqrt(N) H_d of the magnon drive. The model
/// drives the magnon with eps_m equal to this value.
double magnon_drive_amplitude(const MaterialParams& material);

/// Optomagnonic coupling verdet * (c/n_r) * sqrt(2/(rho_s V)).
double optomagnonic_coupling(const MaterialParams& material,
                             const PhysicalConstants& constants = {});

/// Which inputs define the detunings of a SystemParams.
enum class FrequencyInput { detunings, absolute };

/// Optional per-bath temperatures; an unset entry falls back to SystemParams::T.
struct BathTemperatures {
  std::optional<double> T_b, T_m, T_1, T_2;
};

/// One operating point. All angular quantities in rad/s, phase in rad,
/// temperatures in K.
///
/// The detunings are the primary inputs. `with_absolute_frequencies` derives
/// them from drive carriers instead and records that in `frequency_input`.
/// Resonances omega_c1, omega_c2, omega_m only enter the bath occupancies.
struct SystemParams {
  double omega_b = 0;
  double omega_c1 = 0;
  double omega_c2 = 0;
  double omega_m = 0;
  double omega_0 = 0;        // magnon drive carrier (absolute input only)
  double omega_c_drive = 0;  // cavity-2 laser carrier (absolute input only)
  FrequencyInput frequency_input = FrequencyInput::detunings;

  double delta_1 = 0;
  double delta_2 = 0;
  double delta_m0 = 0;
  /// When set, the effective magnon detuning is held at this value and
  /// delta_m0 is whatever the magnomechanical shift implies.
  std::optional<double> delta_m_pinned;

  double kappa_1 = 0;
  double kappa_2 = 0;
  double kappa_m = 0;
  double gamma_b = 0;

  double Gamma = 0;  // cavity-1 / magnon beam-splitter coupling
  double G_mb = 0;   // single-magnon magnomechanical coupling
  double xi = 0;     // converter gain
  double phi = 0;    // converter phase, [0, 2 pi)

  double eps_m = 0;
  double eps_c = 0;

  double T = 0;
  BathTemperatures bath_T;

  /// Converter quadrature couplings.
  double pfc_sin_term() const;  // xi sin(phi), "mu"
  double pfc_cos_term() const;  // xi cos(phi), "nu"

  /// Copy with delta_1 = omega_c1 - omega_0, delta_2 = omega_c2 - omega_c_drive,
  /// delta_m0 = omega_m - omega_0.
  SystemParams with_absolute_frequencies(double omega_0, double omega_c_drive) const;

  /// Frequency of the cavity-2 laser, whichever representation is active.
  double laser_frequency() const;

  /// Throws DomainError on a violated invariant.
  void validate() const;
};

struct BathOccupancy {
  double n_b = 0;
  double n_m = 0;
  double n_1 = 0;
  double n_2 = 0;
};

BathOccupancy bath_occupancy(const SystemParams& params,
                             const PhysicalConstants& constants = {});

}  // namespace cmm
